#include "newt/poly.hpp"

#include <stdexcept>

namespace newt {

Polynomial Polynomial::from_terms(
    const FieldCtx& ctx, std::size_t n,
    const std::vector<std::pair<Exponent, std::uint32_t>>& terms) {
  Polynomial p(ctx, n);
  for (const auto& [e, c] : terms) {
    if (e.size() != n) throw std::invalid_argument("term dimension mismatch");
    p.add_term(e, c);
  }
  return p;
}

void Polynomial::add_term(const Exponent& e, std::uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = ctx_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (&a.ctx() != &b.ctx()) throw std::invalid_argument("field context mismatch");
  if (a.n() != b.n()) throw std::invalid_argument("variable count mismatch");
  Polynomial r(a.ctx(), a.n());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      r.add_term(exp_add(ea, eb), a.ctx().mul(ca, cb));
  return r;
}

Polynomial poly_pow(const Polynomial& a, std::uint32_t e) {
  Polynomial r = Polynomial::from_terms(a.ctx(), a.n(), {{Exponent(a.n()), 1}});
  for (std::uint32_t i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

Polynomial scalar_mul(const Polynomial& a, std::uint32_t c) {
  Polynomial r(a.ctx(), a.n());
  for (const auto& [e, v] : a.terms()) r.add_term(e, a.ctx().mul(v, c));
  return r;
}

Polynomial monomial_quotient(const Polynomial& a, const Exponent& e) {
  Polynomial r(a.ctx(), a.n());
  for (const auto& [ea, c] : a.terms()) r.add_term(exp_sub(ea, e), c);
  return r;
}

Polynomial embed_poly(const Polynomial& a, const FieldCtx& tgt) {
  Polynomial r(tgt, a.n());
  for (const auto& [e, c] : a.terms()) r.add_term(e, embed_index(a.ctx(), tgt, c));
  return r;
}

Support support_of(const Polynomial& a) {
  if (a.is_zero()) throw std::invalid_argument("empty support");
  std::vector<Exponent> pts;
  pts.reserve(a.term_count());
  for (const auto& [e, c] : a.terms()) pts.push_back(e);
  return Support(a.n(), std::move(pts));
}

}  // namespace newt
