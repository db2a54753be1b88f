#pragma once

#include <cstdint>
#include <optional>

#include "newt/errors.hpp"
#include "newt/poly.hpp"
#include "newt/support.hpp"

namespace newt {

struct SearchLimits {
  // Largest extension degree over the input's field that factor coefficients
  // may need. 0 means "total degree of the input", which is always enough.
  std::uint32_t max_ext = 0;
  // Upper bound on the number of candidate factors a single query may try.
  // Exceeding it raises inconclusive_error before any work is done.
  std::uint64_t cap = 100000000;
  unsigned jobs = 1;
};

struct FactorWitness {
  Polynomial left, right;     // over F_{q^extension}; left has lex-min coeff 1
  std::uint32_t extension = 1;
};

struct ReducibilityAnswer {
  bool reducible = false;
  std::optional<FactorWitness> witness;
};

// Does p split into two nonconstant factors over the algebraic closure?
// Decides by enumerating the integral decompositions of the Newton polytope
// and, per summand pair, all candidate factors with that polytope over
// extensions within the per-pair degree bound. Deterministic: the first
// witness found in the fixed scan order is returned.
// pre: p != 0 and p is not a monomial of total degree <= 1.
ReducibilityAnswer is_absolutely_reducible(const Polynomial& p, const SearchLimits& lim = {});

enum class CensusStatus { Empty, All, Proper };

struct Census {
  CensusStatus status = CensusStatus::Empty;
  std::uint64_t reducible = 0;
  std::uint64_t total = 0;  // members with support exactly s, first coeff 1
};

// Members with support exactly s over the field, collapsed by global unit
// scaling: the coefficient at the lex-min exponent is pinned to 1 and the
// rest run over nonzero values, last exponent fastest. census_count
// saturates instead of overflowing.
std::uint64_t census_count(const Support& s, const FieldCtx& field);
Polynomial census_member(const Support& s, const FieldCtx& field, std::uint64_t idx);

// Reducibility census over all members with support exactly s and
// coefficients in the given field, collapsed by global unit scaling.
Census reducibility_census(const Support& s, const FieldCtx& field,
                           const SearchLimits& lim = {});

// First member (in the census enumeration order) that is irreducible over
// the closure; nullopt when every member splits.
std::optional<Polynomial> first_irreducible_member(const Support& s, const FieldCtx& field,
                                                   const SearchLimits& lim = {});

// Newton polytope of a product equals the Minkowski sum of the factors'
// polytopes; compares exact vertex sets. pre: p, q != 0.
bool ostrowski_check(const Polynomial& p, const Polynomial& q);

}  // namespace newt
