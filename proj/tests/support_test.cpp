#include "newt/support.hpp"

#include <stdexcept>

#include "doctest.h"
#include "newt/rational.hpp"

using namespace newt;

static Exponent E(std::initializer_list<std::uint32_t> v) {
  Exponent e(v.size());
  std::size_t i = 0;
  for (auto x : v) e[i++] = x;
  return e;
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(2, 4), b(1, 3);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(7, 1).is_integer());
  CHECK(!Rational(7, 2).is_integer());
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK(Rational(4).str() == "4");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational survives large cross products") {
  Rational big(1000000007LL, 998244353LL);
  Rational r = big * big;
  CHECK(r == Rational(1000000007LL, 998244353LL) * Rational(1000000007LL, 998244353LL));
  CHECK(big < r);
}

TEST_CASE("exponent ordering is lexicographic") {
  CHECK(E({0, 1}) < E({1, 0}));
  CHECK(E({1, 0}) < E({1, 1}));
  CHECK(E({2, 0, 0}) < E({2, 0, 1}));
  CHECK(E({1, 2}) == E({1, 2}));
}

TEST_CASE("exponent arithmetic") {
  CHECK(exp_add(E({1, 2}), E({3, 4})) == E({4, 6}));
  CHECK(exp_sub(E({3, 4}), E({1, 2})) == E({2, 2}));
  CHECK_THROWS_AS(exp_sub(E({1, 2}), E({3, 4})), std::domain_error);
  CHECK(exp_scale(E({1, 2}), 3) == E({3, 6}));
  CHECK(exp_div(E({2, 4}), 2) == E({1, 2}));
  CHECK_THROWS_AS(exp_div(E({1, 2}), 2), std::domain_error);
  CHECK(exp_gcd(E({4, 6})) == 2);
  CHECK(exp_gcd(E({0, 0})) == 0);
  CHECK(E({1, 2}).total() == 3);
  CHECK(exp_leq(E({1, 2}), E({1, 3})));
  CHECK(!exp_leq(E({2, 2}), E({1, 3})));
  CHECK(dot(E({1, 2}), {3, -1}) == 1);
}

TEST_CASE("exponent add overflow is caught") {
  Exponent big(1);
  big[0] = kMaxCoord;
  CHECK_THROWS_AS(exp_add(big, big), std::overflow_error);
}

TEST_CASE("support sorts and dedups") {
  Support s(2, {E({1, 0}), E({0, 1}), E({1, 0})});
  CHECK(s.size() == 2);
  CHECK(s.points()[0] == E({0, 1}));
  CHECK(s.points()[1] == E({1, 0}));
  CHECK(s.contains(E({0, 1})));
  CHECK(!s.contains(E({1, 1})));
  CHECK_THROWS_AS(Support(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Support(2, {E({1})}), std::invalid_argument);
}

TEST_CASE("inf point and normalization") {
  Support s(2, {E({2, 3}), E({4, 1}), E({3, 5})});
  CHECK(inf_point(s) == E({2, 1}));
  auto [norm, shift] = normalize(s);
  CHECK(shift == E({2, 1}));
  CHECK(inf_point(norm).is_zero());
  CHECK(norm.contains(E({0, 2})));
  CHECK(norm.contains(E({2, 0})));
  CHECK(norm.contains(E({1, 4})));
}

TEST_CASE("minkowski sum of supports") {
  Support a(1, {E({0}), E({1})});
  Support b(1, {E({0}), E({2})});
  Support c = minkowski_sum(a, b);
  CHECK(c.size() == 4);
  CHECK(c.contains(E({0})));
  CHECK(c.contains(E({1})));
  CHECK(c.contains(E({2})));
  CHECK(c.contains(E({3})));
}

TEST_CASE("inf is additive under minkowski sum") {
  Support a(2, {E({1, 2}), E({3, 0})});
  Support b(2, {E({2, 1}), E({0, 4})});
  CHECK(inf_point(minkowski_sum(a, b)) == exp_add(inf_point(a), inf_point(b)));
}

TEST_CASE("total degree") {
  Support s(3, {E({1, 0, 0}), E({0, 2, 1})});
  CHECK(total_degree(s) == 3);
}

TEST_CASE("min face picks support points minimizing a direction") {
  Support s(2, {E({0, 0}), E({1, 0}), E({0, 1}), E({1, 1})});
  Support f = min_face(s, {0, 1});
  CHECK(f.size() == 2);
  CHECK(f.contains(E({0, 0})));
  CHECK(f.contains(E({1, 0})));
}

TEST_CASE("segment lattice points in either orientation") {
  auto pts = segment_lattice_points(E({0, 0}), E({4, 2}));
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == E({0, 0}));
  CHECK(pts[1] == E({2, 1}));
  CHECK(pts[2] == E({4, 2}));
  auto rev = segment_lattice_points(E({4, 2}), E({0, 0}));
  CHECK(rev == pts);
  auto mixed = segment_lattice_points(E({0, 4}), E({2, 0}));
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0] == E({0, 4}));
  CHECK(mixed[1] == E({1, 2}));
  CHECK(mixed[2] == E({2, 0}));
  auto single = segment_lattice_points(E({3, 3}), E({3, 3}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == E({3, 3}));
}
