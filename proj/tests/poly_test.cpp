#include "newt/poly.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace newt;

static Exponent E(std::initializer_list<std::uint32_t> v) {
  Exponent e(v.size());
  std::size_t i = 0;
  for (auto x : v) e[i++] = x;
  return e;
}

TEST_CASE("terms accumulate and cancel") {
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  Polynomial p(F3, 2);
  p.add_term(E({1, 0}), 2);
  p.add_term(E({1, 0}), 2);
  CHECK(p.coeff(E({1, 0})) == 1);
  p.add_term(E({1, 0}), 2);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  p.add_term(E({0, 0}), 0);
  CHECK(p.is_zero());
}

TEST_CASE("from_terms builds and classifies") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  Polynomial p = Polynomial::from_terms(F2, 2, {{E({0, 0}), 1}, {E({2, 1}), 1}});
  CHECK(p.term_count() == 2);
  CHECK(p.degree() == 3);
  CHECK(!p.is_monomial());
  CHECK(!p.is_constant());
  Polynomial m = Polynomial::from_terms(F2, 2, {{E({2, 1}), 1}});
  CHECK(m.is_monomial());
  Polynomial c = Polynomial::from_terms(F2, 2, {{E({0, 0}), 1}});
  CHECK(c.is_constant());
  Polynomial z(F2, 2);
  CHECK(z.degree() == -1);
}

TEST_CASE("multiplication in F_2 with cancellation") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  // (x + y)^2 = x^2 + y^2 in characteristic 2.
  Polynomial p = Polynomial::from_terms(F2, 2, {{E({1, 0}), 1}, {E({0, 1}), 1}});
  Polynomial sq = poly_mul(p, p);
  CHECK(sq.term_count() == 2);
  CHECK(sq.coeff(E({2, 0})) == 1);
  CHECK(sq.coeff(E({0, 2})) == 1);
  CHECK(poly_pow(p, 2) == sq);
}

TEST_CASE("binomial expansion over F_5") {
  const FieldCtx& F5 = FieldCtx::get(5, 1);
  // (x + 1)^4 has coefficients 1 4 6 4 1 -> 1 4 1 4 1 mod 5.
  Polynomial p = Polynomial::from_terms(F5, 1, {{E({1}), 1}, {E({0}), 1}});
  Polynomial q = poly_pow(p, 4);
  CHECK(q.coeff(E({0})) == 1);
  CHECK(q.coeff(E({1})) == 4);
  CHECK(q.coeff(E({2})) == 1);
  CHECK(q.coeff(E({3})) == 4);
  CHECK(q.coeff(E({4})) == 1);
}

TEST_CASE("multiplication is commutative and associative on random inputs") {
  const FieldCtx& F7 = FieldCtx::get(7, 1);
  std::mt19937_64 rng(12345);
  auto rand_poly = [&]() {
    Polynomial p(F7, 2);
    for (int t = 0; t < 4; ++t) {
      Exponent e(2);
      e[0] = (std::uint32_t)(rng() % 4);
      e[1] = (std::uint32_t)(rng() % 4);
      p.add_term(e, (std::uint32_t)(rng() % 7));
    }
    return p;
  };
  for (int it = 0; it < 50; ++it) {
    Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
  }
}

TEST_CASE("support of a product sits in the minkowski sum") {
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  std::mt19937_64 rng(777);
  auto rand_poly = [&]() {
    Polynomial p(F3, 2);
    while (p.is_zero())
      for (int t = 0; t < 3; ++t) {
        Exponent e(2);
        e[0] = (std::uint32_t)(rng() % 3);
        e[1] = (std::uint32_t)(rng() % 3);
        p.add_term(e, (std::uint32_t)(rng() % 3));
      }
    return p;
  };
  for (int it = 0; it < 100; ++it) {
    Polynomial a = rand_poly(), b = rand_poly();
    Polynomial ab = poly_mul(a, b);
    if (ab.is_zero()) continue;
    Support sum = minkowski_sum(support_of(a), support_of(b));
    for (const auto& [e, c] : ab.terms()) CHECK(sum.contains(e));
  }
}

TEST_CASE("scalar multiples and monomial quotients") {
  const FieldCtx& F5 = FieldCtx::get(5, 1);
  Polynomial p = Polynomial::from_terms(F5, 2, {{E({1, 1}), 2}, {E({2, 1}), 3}});
  Polynomial s = scalar_mul(p, 2);
  CHECK(s.coeff(E({1, 1})) == 4);
  CHECK(s.coeff(E({2, 1})) == 1);
  CHECK(scalar_mul(p, 0).is_zero());
  Polynomial q = monomial_quotient(p, E({1, 1}));
  CHECK(q.coeff(E({0, 0})) == 2);
  CHECK(q.coeff(E({1, 0})) == 3);
  CHECK_THROWS_AS(monomial_quotient(p, E({0, 2})), std::domain_error);
}

TEST_CASE("embedding a polynomial preserves products") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  Polynomial a = Polynomial::from_terms(F2, 1, {{E({0}), 1}, {E({1}), 1}});
  Polynomial b = Polynomial::from_terms(F2, 1, {{E({0}), 1}, {E({2}), 1}});
  CHECK(embed_poly(poly_mul(a, b), F4) == poly_mul(embed_poly(a, F4), embed_poly(b, F4)));
  CHECK(&embed_poly(a, F4).ctx() == &F4);
}

TEST_CASE("mixing contexts or arities is rejected") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  Polynomial a(F2, 2), b(F3, 2), c(F2, 3);
  CHECK_THROWS_AS(poly_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(poly_mul(a, c), std::invalid_argument);
}

TEST_CASE("support_of rejects zero") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  Polynomial z(F2, 2);
  CHECK_THROWS_AS(support_of(z), std::invalid_argument);
  Polynomial p = Polynomial::from_terms(F2, 2, {{E({1, 2}), 1}});
  Support s = support_of(p);
  CHECK(s.size() == 1);
  CHECK(s.contains(E({1, 2})));
}
