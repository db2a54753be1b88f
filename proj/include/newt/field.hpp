#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace newt {

// Immutable finite field context F_{p^k}, p^k <= 2^20. Elements are encoded
// as integers 0..q-1: the element with power-basis coordinates (c_0..c_{k-1})
// has index sum c_i p^i. Index 0 is zero, index 1 is one.
//
// The modulus is the first monic irreducible of degree k over F_p when
// coefficient vectors (c_0..c_{k-1}) are ordered by c_0 + c_1 p + ...; this
// makes (p, k) alone reproduce the field, so serialized polynomials only
// carry p and k. Contexts are interned: get() returns a shared instance with
// a stable address, and equal (p, k) means pointer equality.
class FieldCtx {
 public:
  static const FieldCtx& get(std::uint32_t p, std::uint32_t k);
  static constexpr std::uint64_t kMaxFieldSize = 1u << 20;

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Modulus constant coefficients (c_0..c_{k-1}) of x^k + c_{k-1}x^{k-1} + ... + c_0.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string spec() const { return std::to_string(p_) + "^" + std::to_string(k_); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Multiplicative order; error on zero.
  std::uint64_t order(std::uint32_t a) const;
  // Smallest-index generator of the multiplicative group.
  std::uint32_t generator() const { return generator_; }

  std::vector<std::uint32_t> coords(std::uint32_t a) const;
  std::uint32_t from_coords(const std::vector<std::uint32_t>& c) const;

 private:
  FieldCtx(std::uint32_t p, std::uint32_t k);

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_;
  std::vector<std::uint32_t> exp_;   // exp_[i] = g^i, i in 0..q-2
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
  std::vector<std::uint32_t> zech_;  // zech_[i] = log(1 + g^i), kZechZero if 1 + g^i = 0
  static constexpr std::uint32_t kZechZero = 0xffffffffu;
};

struct FieldElement {
  const FieldCtx* ctx = nullptr;
  std::uint32_t idx = 0;

  FieldElement() = default;
  FieldElement(const FieldCtx& c, std::uint32_t i) : ctx(&c), idx(i) {}

  bool is_zero() const { return idx == 0; }
  std::vector<std::uint32_t> coords() const { return ctx->coords(idx); }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {*a.ctx, a.ctx->add(a.idx, b.idx)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {*a.ctx, a.ctx->sub(a.idx, b.idx)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {*a.ctx, a.ctx->mul(a.idx, b.idx)};
  }
  friend FieldElement operator-(FieldElement a) { return {*a.ctx, a.ctx->neg(a.idx)}; }
  FieldElement inverse() const { return {*ctx, ctx->inv(idx)}; }
  FieldElement pow(std::uint64_t e) const { return {*ctx, ctx->pow(idx, e)}; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// Canonical field homomorphism F_{p^k} -> F_{p^k'}, k | k'. The image of the
// source power-basis generator is the smallest-index root of the source
// modulus in the target; memoized per (p, k, k').
std::uint32_t embed_index(const FieldCtx& src, const FieldCtx& tgt, std::uint32_t a);
FieldElement embed(const FieldElement& x, const FieldCtx& tgt);

// Inverse of the Frobenius x -> x^p (bijective): x^{p^{k-1}}.
FieldElement frobenius_inverse(const FieldElement& x);

// Smallest field F_{p^k} containing a primitive d-th root of unity, together
// with one of exact order d (generator^((q-1)/d)). Error if p divides d.
std::pair<const FieldCtx*, FieldElement> primitive_root_of_unity(std::uint32_t p,
                                                                 std::uint32_t d);

struct Root {
  std::uint32_t extic;  // extension degree m over the coefficient field
  FieldElement value;   // element of F_{p^{k*m}}
  std::uint32_t multiplicity;
};

// Roots of a nonzero univariate polynomial (coefficients ascending, over ctx)
// in extensions F_{p^{k*m}}, m = 1..max_ext. Each root is reported once, in
// the smallest extension containing it, elements in ascending index order.
std::vector<Root> univariate_roots(const FieldCtx& ctx,
                                   const std::vector<std::uint32_t>& coeffs,
                                   std::uint32_t max_ext);

bool is_prime(std::uint32_t n);
// Parses "p^k" (or bare "p") and returns the interned context.
const FieldCtx& parse_field_spec(const std::string& s);

}  // namespace newt
