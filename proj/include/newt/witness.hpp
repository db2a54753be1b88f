#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newt/oracle.hpp"
#include "newt/poly.hpp"
#include "newt/support.hpp"

namespace newt {

// A question about product supports: is there a pair of polynomials with
// supports exactly (left, right) whose product has support exactly product?
// For the family built by witness_triple the answer depends only on whether
// the characteristic divides d.
struct SupportTriple {
  Support left, right, product;
  std::uint32_t d;
};

// The three-variable family: |left| = 6, |right| = 2d+2, |product| = 4d+7.
// pre: d >= 2.
SupportTriple witness_triple(std::uint32_t d);

struct WitnessPair {
  Polynomial p, q;        // supports exactly (left, right), product support exactly product
  FieldElement zeta, a;   // the chosen primitive d-th root and free coefficient
};

// Explicit pair showing the product support is attainable when the
// characteristic does not divide d. Extends the base field until it holds a
// primitive d-th root of unity zeta and an element a outside
// {0} u mu_d u {-1, -zeta^-1}; both choices are the first in index order.
WitnessPair witness_pair(std::uint32_t d, const FieldCtx& base);

// Exhaustive in-field scan over unit-collapsed pairs with supports exactly
// (t.left, t.right); returns the first pair whose product support is exactly
// t.product, or nullopt when none exists in this field.
std::optional<WitnessPair> find_product_pair(const SupportTriple& t, const FieldCtx& field,
                                             const SearchLimits& lim = {});

// Glues the triple into one support in n+2 variables:
// product x {(0,0)} u left x {(0,1)} u right x {(1,0)} u {(0,..,0,1,1)}.
Support lift_triple(const SupportTriple& t);

// Coefficient vector of the linear functional reading coordinate
// digit_order[t] as digit t of a mixed-radix number with radix radices[t]:
// coefficient at digit_order[t] is radices[0] * .. * radices[t-1]. Injective
// on the radix box. pre: radices[t] >= 2, digit_order a permutation.
std::vector<long long> flatten_map(const std::vector<std::uint32_t>& radices,
                                   const std::vector<std::size_t>& digit_order);

// Applies x -> offset + <ell, x> coordinate-functional to the three supports
// (off_left + ell(left), off_right + ell(right), off_left + off_right +
// ell(product)). Errors, naming a colliding pair, unless ell is injective on
// left + right; the property the triple encodes is preserved either way.
SupportTriple transport_triple(const SupportTriple& t, const std::vector<long long>& ell,
                               long long off_left, long long off_right);

// Substitution X_s -> U^{ell[s]} followed by multiplication with U^off.
Polynomial transport_poly(const Polynomial& p, const std::vector<long long>& ell,
                          long long off);

enum class PlaneLift { Shifted, UnionMerge, SymmetricDifference };

// Packs a univariate triple (min 0 each, max(product) = max(left) +
// max(right)) into the plane: rows 0 and 1 carry J0 and J1, row 2 the apex.
// Shifted: h > max(left), J0 = h + product, J1 = left u (h + right).
// UnionMerge / SymmetricDifference: h = max(left), J0 = h + product,
// J1 = left u (h + right) resp. left symdiff (h + right); both require
// product u {h} != left u (h + right).
Support lift_to_plane(const SupportTriple& t, PlaneLift variant, std::uint32_t h);

struct CharacteristicWitness {
  char tag = 'a';                     // 'a' or 'b'
  std::vector<std::uint32_t> primes;  // S, sorted and distinct
  std::uint32_t d = 1;                // product of S (1 when S is empty)
  Support j;
};

// tag 'b': the triangle {(0,0),(d,0),(0,d)}, whose census is All exactly in
// characteristics dividing d. tag 'a': the planar lift of the transported
// triple (empty S realized by {1,2}), whose census is Empty exactly in
// characteristics in S.
CharacteristicWitness build_characteristic_witness(std::vector<std::uint32_t> primes,
                                                   char tag);

struct VerifyRow {
  std::string field;     // "p^k"
  std::string check;     // "census" or "product_pair"
  std::string expected;  // "all" / "empty" or "absent" / "present"
  std::string outcome;   // observed value, or "inconclusive"
  bool ok = false;
  bool inconclusive = false;
};

// Checks the witness against each field: censuses for tag 'b' and the empty-S
// witness, product-pair existence on the transported univariate triple
// otherwise. Budget overruns become distinct inconclusive rows.
std::vector<VerifyRow> verify_witness(const CharacteristicWitness& w,
                                      const std::vector<const FieldCtx*>& fields,
                                      const SearchLimits& lim = {});

}  // namespace newt
