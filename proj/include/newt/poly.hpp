#pragma once

#include <map>
#include <vector>

#include "newt/field.hpp"
#include "newt/support.hpp"

namespace newt {

// Sparse multivariate polynomial over a shared FieldCtx. Terms are keyed by
// exponent in lex order; zero coefficients are never stored. Polynomials over
// different contexts never mix implicitly; use embed_poly.
class Polynomial {
 public:
  Polynomial(const FieldCtx& ctx, std::size_t n) : ctx_(&ctx), n_(n) {}

  static Polynomial from_terms(const FieldCtx& ctx, std::size_t n,
                               const std::vector<std::pair<Exponent, std::uint32_t>>& terms);

  const FieldCtx& ctx() const { return *ctx_; }
  std::size_t n() const { return n_; }
  const std::map<Exponent, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::uint32_t coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  // Accumulates; erases the term if the sum cancels.
  void add_term(const Exponent& e, std::uint32_t c);

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  long long degree() const;  // max coordinate sum, -1 for zero

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  const FieldCtx* ctx_;
  std::size_t n_;
  std::map<Exponent, std::uint32_t> terms_;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& a, std::uint32_t e);
Polynomial scalar_mul(const Polynomial& a, std::uint32_t c);
// Divides every term by the monomial X^e; error if some term is not divisible.
Polynomial monomial_quotient(const Polynomial& a, const Exponent& e);
Polynomial embed_poly(const Polynomial& a, const FieldCtx& tgt);
// Error "empty support" on the zero polynomial.
Support support_of(const Polynomial& a);

}  // namespace newt
