#pragma once

#include <string>

#include "json.hpp"
#include "newt/classify.hpp"
#include "newt/factor.hpp"
#include "newt/oracle.hpp"
#include "newt/polytope.hpp"
#include "newt/witness.hpp"

// JSON wire layer. Parsers throw std::invalid_argument carrying the path of
// the offending element (e.g. "$.terms[2].coeff"); serializers are pure and
// emit keys in sorted order, so dumps are byte-stable.
namespace newt::io {

using nlohmann::json;

json load_file(const std::string& filename);

Support support_from_json(const json& j, const std::string& path = "$");
json support_to_json(const Support& s);

Polynomial poly_from_json(const json& j, const std::string& path = "$");
json poly_to_json(const Polynomial& p);

json classification_to_json(const Classification& c);
json census_to_json(const Census& c);
json factorization_to_json(const Factorization& f);
json reducibility_to_json(const ReducibilityAnswer& a);
json decomposition_to_json(const Decomposition& d);

// Rejects witness files whose support does not match a rebuild from the
// declared prime set and case tag, so an accepted file is always genuine.
CharacteristicWitness witness_from_json(const json& j, const std::string& path = "$");
json witness_to_json(const CharacteristicWitness& w);
json verify_rows_to_json(const std::vector<VerifyRow>& rows);

}  // namespace newt::io
