#include "newt/field.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace newt;

TEST_CASE("contexts are interned") {
  const FieldCtx& a = FieldCtx::get(2, 2);
  const FieldCtx& b = FieldCtx::get(2, 2);
  CHECK(&a == &b);
  CHECK(a.q() == 4);
  CHECK(a.spec() == "2^2");
}

TEST_CASE("moduli are the first irreducibles in index order") {
  // Degree-2 over F_2: x^2+x+1 is the only irreducible, coeffs (1,1).
  CHECK(FieldCtx::get(2, 2).modulus() == std::vector<std::uint32_t>{1, 1});
  // Degree-3 over F_2: candidates ordered by c0+2c1+4c2; x^3+x+1 (coeffs 1,1,0)
  // precedes x^3+x^2+1 (coeffs 1,0,1).
  CHECK(FieldCtx::get(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0});
  // Degree-2 over F_3: x^2+1 (coeffs 1,0) is irreducible and first.
  CHECK(FieldCtx::get(3, 2).modulus() == std::vector<std::uint32_t>{1, 0});
  // Degree-2 over F_5: x^2+2 (coeffs 2,0) is first; x^2+1 has root 2.
  CHECK(FieldCtx::get(5, 2).modulus() == std::vector<std::uint32_t>{2, 0});
}

static void check_axioms(const FieldCtx& F) {
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    CHECK(F.add(a, 0) == a);
    CHECK(F.mul(a, 1) == a);
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    for (std::uint32_t b = 0; b < F.q(); ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (std::uint32_t c = 0; c < F.q(); ++c) {
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  check_axioms(FieldCtx::get(2, 1));
  check_axioms(FieldCtx::get(3, 1));
  check_axioms(FieldCtx::get(2, 2));
  check_axioms(FieldCtx::get(5, 1));
  check_axioms(FieldCtx::get(2, 3));
  check_axioms(FieldCtx::get(3, 2));
  check_axioms(FieldCtx::get(7, 1));
}

TEST_CASE("prime field arithmetic matches integers mod p") {
  const FieldCtx& F7 = FieldCtx::get(7, 1);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) {
      CHECK(F7.add(a, b) == (a + b) % 7);
      CHECK(F7.mul(a, b) == (a * b) % 7);
    }
}

TEST_CASE("coords round trip") {
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) {
    auto c = F9.coords(a);
    REQUIRE(c.size() == 2);
    CHECK(c[0] + 3 * c[1] == a);
    CHECK(F9.from_coords(c) == a);
  }
}

TEST_CASE("F_9 multiplication respects x^2 = -1") {
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  std::uint32_t x = F9.from_coords({0, 1});
  CHECK(F9.mul(x, x) == F9.neg(1));
  // (1+x)(1-x) = 1 - x^2 = 2.
  std::uint32_t a = F9.from_coords({1, 1});
  std::uint32_t b = F9.from_coords({1, 2});
  CHECK(F9.mul(a, b) == 2);
}

TEST_CASE("generator has full order and powers enumerate units") {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {13u, 1u}}) {
    const FieldCtx& F = FieldCtx::get(p, k);
    std::uint32_t g = F.generator();
    CHECK(F.order(g) == F.q() - 1);
    std::set<std::uint32_t> seen;
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < F.q(); ++i) {
      seen.insert(x);
      x = F.mul(x, g);
    }
    CHECK(seen.size() == F.q() - 1);
    // No smaller index generates.
    for (std::uint32_t h = 1; h < g; ++h) CHECK(F.order(h) < F.q() - 1);
  }
}

TEST_CASE("pow handles large exponents via the group order") {
  const FieldCtx& F = FieldCtx::get(3, 4);
  std::uint32_t g = F.generator();
  CHECK(F.pow(g, F.q() - 1) == 1);
  CHECK(F.pow(g, (std::uint64_t)(F.q() - 1) * 1000003 + 5) == F.pow(g, 5));
  CHECK(F.pow(0, 5) == 0);
  CHECK(F.pow(g, 0) == 1);
}

TEST_CASE("embedding is a field homomorphism") {
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  const FieldCtx& F16 = FieldCtx::get(2, 4);
  CHECK(embed_index(F4, F16, 0) == 0);
  CHECK(embed_index(F4, F16, 1) == 1);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      CHECK(embed_index(F4, F16, F4.add(a, b)) ==
            F16.add(embed_index(F4, F16, a), embed_index(F4, F16, b)));
      CHECK(embed_index(F4, F16, F4.mul(a, b)) ==
            F16.mul(embed_index(F4, F16, a), embed_index(F4, F16, b)));
    }
  // Injective.
  std::set<std::uint32_t> img;
  for (std::uint32_t a = 0; a < 4; ++a) img.insert(embed_index(F4, F16, a));
  CHECK(img.size() == 4);
}

TEST_CASE("embedding composes along towers") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  const FieldCtx& F16 = FieldCtx::get(2, 4);
  for (std::uint32_t a = 0; a < 2; ++a)
    CHECK(embed_index(F2, F16, a) ==
          embed_index(F4, F16, embed_index(F2, F4, a)));
  CHECK_THROWS_AS(embed_index(F4, FieldCtx::get(2, 3), 1), std::invalid_argument);
}

TEST_CASE("frobenius inverse inverts p-th power everywhere") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}}) {
    const FieldCtx& F = FieldCtx::get(p, k);
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      FieldElement x(F, a);
      CHECK(frobenius_inverse(x).pow(p) == x);
      CHECK(frobenius_inverse(x.pow(p)) == x);
    }
  }
}

TEST_CASE("primitive roots of unity have exact order") {
  auto [F, z] = primitive_root_of_unity(3, 2);
  CHECK(F->q() == 3);  // -1 lives in F_3
  CHECK(z.idx == 2);
  auto [F2, z2] = primitive_root_of_unity(3, 4);
  CHECK(F2->q() == 9);  // ord_4(3) = 2
  CHECK(F2->order(z2.idx) == 4);
  auto [F3, z3] = primitive_root_of_unity(2, 3);
  CHECK(F3->q() == 4);
  CHECK(F3->order(z3.idx) == 3);
  auto [F5, z5] = primitive_root_of_unity(5, 6);
  CHECK(F5->q() == 25);  // ord_6(5) = 2
  CHECK(F5->order(z5.idx) == 6);
  CHECK_THROWS_AS(primitive_root_of_unity(2, 4), std::invalid_argument);
}

TEST_CASE("univariate roots in the base field") {
  const FieldCtx& F5 = FieldCtx::get(5, 1);
  // x^2 - 1 = (x-1)(x+1)
  auto roots = univariate_roots(F5, {4, 0, 1}, 1);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].extic == 1);
  CHECK(roots[0].value.idx == 1);
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].value.idx == 4);
  // (x-2)^2 = x^2 + x + 4
  auto dbl = univariate_roots(F5, {4, 1, 1}, 1);
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].value.idx == 2);
  CHECK(dbl[0].multiplicity == 2);
}

TEST_CASE("univariate roots appear in their minimal extension") {
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  // x^2 + 1 is irreducible over F_3; roots lie in F_9 only.
  auto none = univariate_roots(F3, {1, 0, 1}, 1);
  CHECK(none.empty());
  auto two = univariate_roots(F3, {1, 0, 1}, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].extic == 2);
  CHECK(two[1].extic == 2);
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  for (const auto& r : two) {
    CHECK(r.value.ctx == &F9);
    CHECK(F9.add(F9.mul(r.value.idx, r.value.idx), 1) == 0);
  }
  CHECK(two[0].value.idx < two[1].value.idx);
  // A root already in F_3 is not re-reported in F_9: x^2 - x has roots 0, 1.
  auto base = univariate_roots(F3, {0, 2, 1}, 2);
  REQUIRE(base.size() == 2);
  CHECK(base[0].extic == 1);
  CHECK(base[1].extic == 1);
}

TEST_CASE("roots reconstruct a cubic split across extensions") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  // x^3 + x^2 + x + 1 = (x+1)(x^2+1) = (x+1)^3 over F_2.
  auto r = univariate_roots(F2, {1, 1, 1, 1}, 3);
  REQUIRE(r.size() == 1);
  CHECK(r[0].extic == 1);
  CHECK(r[0].value.idx == 1);
  CHECK(r[0].multiplicity == 3);
  // x^3 + x + 1 is irreducible; all three roots in F_8.
  auto s = univariate_roots(F2, {1, 1, 0, 1}, 3);
  REQUIRE(s.size() == 3);
  for (const auto& root : s) {
    CHECK(root.extic == 3);
    CHECK(root.multiplicity == 1);
  }
}

TEST_CASE("roots of the zero-degree and zero polynomials are rejected") {
  const FieldCtx& F2 = FieldCtx::get(2, 1);
  CHECK(univariate_roots(F2, {1}, 2).empty());
  CHECK_THROWS_AS(univariate_roots(F2, {0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(univariate_roots(F2, {}, 2), std::invalid_argument);
}

TEST_CASE("primality test") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(65521));
  CHECK(!is_prime(1));
  CHECK(!is_prime(0));
  CHECK(!is_prime(4));
  CHECK(!is_prime(65535));
}

TEST_CASE("field specs parse and validate") {
  CHECK(&parse_field_spec("5") == &FieldCtx::get(5, 1));
  CHECK(&parse_field_spec("2^4") == &FieldCtx::get(2, 4));
  CHECK_THROWS_AS(parse_field_spec("4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_spec("6^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_spec("2^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_spec("2^0"), std::invalid_argument);
}

TEST_CASE("field size cap is enforced") {
  CHECK_THROWS_AS(FieldCtx::get(2, 21), std::invalid_argument);
  CHECK_NOTHROW(FieldCtx::get(2, 20));
}
