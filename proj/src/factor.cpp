#include "newt/factor.hpp"

#include <stdexcept>
#include <string>

#include "newt/errors.hpp"

namespace newt {

namespace {

// Scale so the left factor has coefficient 1 at its lex-min exponent; the
// inverse lands on the right factor. Verifies left * right == p exactly.
Factorization finish(const Polynomial& p, Polynomial left, Polynomial right,
                     std::uint32_t extension) {
  const FieldCtx& f = left.ctx();
  std::uint32_t c = left.terms().begin()->second;
  if (c != 1) {
    left = scalar_mul(left, f.inv(c));
    right = scalar_mul(right, c);
  }
  Polynomial target = &p.ctx() == &f ? p : embed_poly(p, f);
  if (poly_mul(left, right) != target)
    throw std::logic_error("factor product check failed");
  if (left.is_constant() || right.is_constant())
    throw std::logic_error("factor degenerated to a constant");
  return Factorization{std::move(left), std::move(right), extension};
}

}  // namespace

Factorization factor_common_variable(const Polynomial& p, std::size_t t) {
  if (p.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  if (t >= p.n()) throw std::invalid_argument("variable index out of range");
  Exponent unit(p.n());
  unit[t] = 1;
  for (const auto& [e, c] : p.terms())
    if (e[t] < 1) throw std::invalid_argument("a term is not divisible by the variable");
  if (p.is_monomial() && p.terms().begin()->first == unit)
    throw std::invalid_argument("polynomial is a scalar multiple of the variable");
  Polynomial left(p.ctx(), p.n());
  left.add_term(unit, 1);
  return finish(p, left, monomial_quotient(p, unit), 1);
}

Factorization factor_segment(const Polynomial& p, const Exponent& i, const Exponent& j,
                             std::uint32_t d, std::uint32_t max_ext) {
  if (p.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  if (d < 2) throw std::invalid_argument("segment gcd must be at least 2");
  if (i == j) throw std::invalid_argument("degenerate segment");
  if (i.size() != p.n() || j.size() != p.n())
    throw std::invalid_argument("endpoint dimension mismatch");
  if (max_ext == 0) max_ext = d;

  // i/d and j/d must be integral
  Exponent iu = exp_div(i, d);
  Exponent ju = exp_div(j, d);

  // lattice points of [i, j] in parameter order from i, step (j - i)/d
  std::vector<Exponent> pts;
  pts.reserve(d + 1);
  for (std::uint32_t a = 0; a <= d; ++a) {
    Exponent e(p.n());
    for (std::size_t s = 0; s < p.n(); ++s) {
      long long v = (static_cast<long long>(i[s]) * (d - a) + static_cast<long long>(j[s]) * a) / d;
      e[s] = static_cast<std::uint32_t>(v);
    }
    pts.push_back(std::move(e));
  }

  std::vector<std::uint32_t> coeffs(d + 1);
  std::size_t hit = 0;
  for (std::uint32_t a = 0; a <= d; ++a) {
    coeffs[a] = p.coeff(pts[a]);
    if (coeffs[a]) ++hit;
  }
  if (coeffs[0] == 0 || coeffs[d] == 0)
    throw std::invalid_argument("segment endpoints must carry nonzero coefficients");
  if (hit != p.term_count())
    throw std::invalid_argument("support does not lie on the segment");

  auto roots = univariate_roots(p.ctx(), coeffs, max_ext);
  if (roots.empty())
    throw inconclusive_error("no root within extension degree " + std::to_string(max_ext) +
                             "; degree " + std::to_string(d) + " always splits by then");
  const Root& r = roots.front();
  const FieldCtx& ext = *r.value.ctx;

  std::vector<std::uint32_t> c(d + 1);
  for (std::uint32_t a = 0; a <= d; ++a) c[a] = embed_index(p.ctx(), ext, coeffs[a]);

  // synthetic division by (u - r): p(u) = (u - r) * sum b_a u^a
  std::vector<std::uint32_t> b(d);
  b[d - 1] = c[d];
  for (std::uint32_t a = d - 1; a >= 1; --a) b[a - 1] = ext.add(c[a], ext.mul(r.value.idx, b[a]));
  if (ext.add(c[0], ext.mul(r.value.idx, b[0])) != 0)
    throw std::logic_error("synthetic division left a remainder");

  // left: X^{j/d} - r X^{i/d}; right: sum_a b_a X^{(d-1-a) i/d + a j/d}
  Polynomial left(ext, p.n());
  left.add_term(ju, 1);
  left.add_term(iu, ext.neg(r.value.idx));
  Polynomial right(ext, p.n());
  for (std::uint32_t a = 0; a < d; ++a) {
    if (b[a] == 0) continue;
    right.add_term(exp_add(exp_scale(iu, d - 1 - a), exp_scale(ju, a)), b[a]);
  }
  return finish(p, std::move(left), std::move(right), r.extic);
}

Factorization factor_prime_power(const Polynomial& p, std::uint32_t prime) {
  if (p.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  if (p.ctx().p() != prime)
    throw std::invalid_argument("characteristic does not match the requested prime");
  if (p.is_constant()) throw std::invalid_argument("constant has no nonconstant factors");
  Polynomial q(p.ctx(), p.n());
  for (const auto& [e, c] : p.terms())
    q.add_term(exp_div(e, prime), frobenius_inverse(FieldElement(p.ctx(), c)).idx);
  return finish(p, q, poly_pow(q, prime - 1), 1);
}

Factorization factor_by_certificate(const Polynomial& p, const Classification& c,
                                    std::uint32_t max_ext) {
  switch (c.certificate.kind) {
    case Certificate::Kind::CommonVariable:
      return factor_common_variable(p, c.certificate.t);
    case Certificate::Kind::Segment:
      return factor_segment(p, c.certificate.i, c.certificate.j, c.certificate.d, max_ext);
    case Certificate::Kind::PrimePower: {
      std::uint32_t ch = p.ctx().p();
      for (std::uint32_t q : c.certificate.primes)
        if (q == ch) return factor_prime_power(p, ch);
      throw std::invalid_argument("characteristic " + std::to_string(ch) +
                                  " is not covered by the certificate");
    }
    case Certificate::Kind::None:
      break;
  }
  throw std::invalid_argument("no factorization certificate for this support");
}

}  // namespace newt
