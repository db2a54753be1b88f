#include "newt/witness.hpp"

#include <set>

#include "doctest.h"
#include "newt/errors.hpp"

using namespace newt;

namespace {

std::vector<std::uint32_t> line(const Support& s) {
  std::vector<std::uint32_t> v;
  for (const auto& e : s.points()) v.push_back(e[0]);
  return v;
}

}  // namespace

TEST_CASE("triple size identities") {
  for (std::uint32_t d = 2; d <= 6; ++d) {
    CAPTURE(d);
    auto t = witness_triple(d);
    CHECK(t.left.size() == 6);
    CHECK(t.right.size() == 2 * d + 2);
    CHECK(t.product.size() == 4 * d + 7);
    CHECK(t.d == d);
    CHECK(lift_triple(t).size() == 6 * d + 16);
  }
  CHECK_THROWS_AS(witness_triple(1), std::invalid_argument);
  CHECK_THROWS_AS(witness_triple(0), std::invalid_argument);
}

TEST_CASE("triple membership, d = 2") {
  auto t = witness_triple(2);
  auto has = [](const Support& s, std::initializer_list<std::uint32_t> v) {
    return s.contains(Exponent(v));
  };
  CHECK(has(t.left, {0, 0, 0}));
  CHECK(has(t.left, {1, 1, 0}));
  CHECK(has(t.left, {0, 1, 1}));
  CHECK(!has(t.left, {1, 0, 1}));
  CHECK(has(t.right, {2, 1, 0}));
  CHECK(!has(t.right, {0, 0, 1}));
  // rows carved out of the box so that any factorization is pinned down
  CHECK(!has(t.product, {1, 0, 0}));
  CHECK(!has(t.product, {2, 2, 0}));
  CHECK(!has(t.product, {0, 1, 1}));
  CHECK(!has(t.product, {2, 1, 1}));
  CHECK(has(t.product, {0, 2, 0}));
  CHECK(has(t.product, {3, 2, 0}));
  CHECK(has(t.product, {1, 1, 1}));
}

TEST_CASE("explicit pair, d = 2 over F_5") {
  auto wp = witness_pair(2, FieldCtx::get(5, 1));
  CHECK(wp.p.ctx().q() == 5);
  CHECK(wp.zeta.idx == 4);
  CHECK(wp.a.idx == 2);
  auto t = witness_triple(2);
  CHECK(support_of(wp.p).points() == t.left.points());
  CHECK(support_of(wp.q).points() == t.right.points());
  CHECK(support_of(poly_mul(wp.p, wp.q)).points() == t.product.points());
}

TEST_CASE("explicit pair, d = 2 over F_3 escalates to F_9") {
  auto wp = witness_pair(2, FieldCtx::get(3, 1));
  CHECK(wp.p.ctx().q() == 9);
  CHECK(wp.zeta.idx == 2);  // the square root of unity is -1
  CHECK(wp.a.idx == 3);     // first admissible scalar lies outside the prime field
}

TEST_CASE("explicit pair rejects characteristic dividing d") {
  CHECK_THROWS_AS(witness_pair(2, FieldCtx::get(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(witness_pair(6, FieldCtx::get(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(witness_pair(1, FieldCtx::get(5, 1)), std::invalid_argument);
}

TEST_CASE("explicit pair validity grid") {
  for (std::uint32_t d = 2; d <= 4; ++d) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (d % p == 0) continue;
      CAPTURE(d);
      CAPTURE(p);
      auto wp = witness_pair(d, FieldCtx::get(p, 1));
      auto t = witness_triple(d);
      CHECK(support_of(poly_mul(wp.p, wp.q)).points() == t.product.points());
      CHECK(wp.p.coeff(Exponent{0, 1, 0}) == wp.a.idx);
      const auto& f = wp.p.ctx();
      CHECK(f.pow(wp.zeta.idx, d) == 1);
    }
  }
}

TEST_CASE("in-field pair search") {
  auto t = witness_triple(2);
  SUBCASE("absent over F_2") {
    CHECK(!find_product_pair(t, FieldCtx::get(2, 1), {}).has_value());
  }
  SUBCASE("absent over F_3") {
    CHECK(!find_product_pair(t, FieldCtx::get(3, 1), {}).has_value());
  }
  SUBCASE("absent over F_4") {
    CHECK(!find_product_pair(t, FieldCtx::get(2, 2), {}).has_value());
  }
  SUBCASE("present over F_5, deterministic across jobs") {
    auto one = find_product_pair(t, FieldCtx::get(5, 1), {});
    REQUIRE(one.has_value());
    CHECK(support_of(poly_mul(one->p, one->q)).points() == t.product.points());
    SearchLimits lim;
    lim.jobs = 4;
    auto par = find_product_pair(t, FieldCtx::get(5, 1), lim);
    REQUIRE(par.has_value());
    CHECK(par->p == one->p);
    CHECK(par->q == one->q);
  }
  SUBCASE("cap guards the scan") {
    SearchLimits lim;
    lim.cap = 10;
    CHECK_THROWS_AS(find_product_pair(t, FieldCtx::get(5, 1), lim), inconclusive_error);
  }
}

TEST_CASE("flatten map") {
  auto ell = flatten_map({2, 3}, {0, 1});
  CHECK(ell == std::vector<long long>({1, 2}));
  Exponent e{1, 2};
  CHECK(ell[0] * e[0] + ell[1] * e[1] == 5);

  std::set<long long> seen;
  for (std::uint32_t x = 0; x < 2; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) seen.insert(ell[0] * x + ell[1] * y);
  CHECK(seen.size() == 6);

  CHECK(flatten_map({3, 2, 4}, {1, 2, 0}) == std::vector<long long>({6, 1, 3}));

  CHECK_THROWS_AS(flatten_map({1, 3}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(flatten_map({2, 3}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(flatten_map({2, 3}, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(flatten_map({2, 3}, {0}), std::invalid_argument);
}

TEST_CASE("transport to one variable, d = 2") {
  auto t = witness_triple(2);
  auto ell = flatten_map({3, 2, 4}, {1, 2, 0});
  auto t1 = transport_triple(t, ell, 0, 0);
  CHECK(t1.left.n() == 1);
  CHECK(line(t1.left) == std::vector<std::uint32_t>({0, 1, 3, 4, 6, 7}));
  CHECK(line(t1.right) == std::vector<std::uint32_t>({0, 1, 6, 7, 12, 13}));
  CHECK(line(t1.product) ==
        std::vector<std::uint32_t>({0, 1, 2, 3, 5, 7, 9, 10, 11, 13, 15, 17, 18, 19, 20}));
  CHECK(t1.d == 2);

  auto shifted = transport_triple(t, ell, 5, 2);
  CHECK(line(shifted.left).front() == 5);
  CHECK(line(shifted.right).front() == 2);
  CHECK(line(shifted.product).front() == 7);
}

TEST_CASE("transport rejects colliding functionals") {
  auto t = witness_triple(2);
  std::vector<long long> sum_coords{1, 1, 1};
  CHECK_THROWS_WITH_AS(transport_triple(t, sum_coords, 0, 0),
                       doctest::Contains("collides"), std::invalid_argument);
  CHECK_THROWS_AS(transport_triple(t, {1, 2}, 0, 0), std::invalid_argument);
}

TEST_CASE("transported polynomials still multiply to the target row") {
  auto wp = witness_pair(2, FieldCtx::get(5, 1));
  auto ell = flatten_map({3, 2, 4}, {1, 2, 0});
  auto t1 = transport_triple(witness_triple(2), ell, 0, 0);
  auto p1 = transport_poly(wp.p, ell, 0);
  auto q1 = transport_poly(wp.q, ell, 0);
  CHECK(support_of(p1).points() == t1.left.points());
  CHECK(support_of(q1).points() == t1.right.points());
  CHECK(support_of(poly_mul(p1, q1)).points() == t1.product.points());
}

TEST_CASE("plane lift") {
  auto ell = flatten_map({3, 2, 4}, {1, 2, 0});
  auto t1 = transport_triple(witness_triple(2), ell, 0, 0);

  SUBCASE("symmetric difference at the junction") {
    auto j = lift_to_plane(t1, PlaneLift::SymmetricDifference, 7);
    CHECK(j.size() == 26);
    CHECK(total_degree(j) == 27);
    CHECK(j.contains(Exponent{0, 2}));
    CHECK(j.contains(Exponent{7, 0}));
    CHECK(!j.contains(Exponent{7, 1}));  // junction point cancels
    CHECK(j.contains(Exponent{0, 1}));
    CHECK(j.contains(Exponent{20, 1}));
  }
  SUBCASE("union at the junction") {
    auto j = lift_to_plane(t1, PlaneLift::UnionMerge, 7);
    CHECK(j.size() == 27);
    CHECK(j.contains(Exponent{7, 1}));
  }
  SUBCASE("disjoint shift") {
    auto j = lift_to_plane(t1, PlaneLift::Shifted, 9);
    CHECK(j.size() == 15 + 12 + 1);
    CHECK(total_degree(j) == 29);
    CHECK_THROWS_AS(lift_to_plane(t1, PlaneLift::Shifted, 7), std::invalid_argument);
  }
  SUBCASE("junction variants demand exact offset") {
    CHECK_THROWS_AS(lift_to_plane(t1, PlaneLift::SymmetricDifference, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_to_plane(t1, PlaneLift::UnionMerge, 6), std::invalid_argument);
  }
  SUBCASE("degenerate merge is rejected") {
    Support l(1, {Exponent{0}, Exponent{1}});
    Support pr(1, {Exponent{0}, Exponent{1}, Exponent{2}});
    SupportTriple flat{l, l, pr, 2};
    CHECK_THROWS_AS(lift_to_plane(flat, PlaneLift::SymmetricDifference, 1),
                    std::invalid_argument);
    CHECK(lift_to_plane(flat, PlaneLift::Shifted, 2).size() == 8);
  }
}

TEST_CASE("characteristic witness construction") {
  SUBCASE("triangle form") {
    auto w = build_characteristic_witness({3, 2}, 'b');
    CHECK(w.tag == 'b');
    CHECK(w.primes == std::vector<std::uint32_t>({2, 3}));
    CHECK(w.d == 6);
    CHECK(w.j.points() ==
          std::vector<Exponent>({Exponent{0, 0}, Exponent{0, 6}, Exponent{6, 0}}));
    CHECK_THROWS_AS(build_characteristic_witness({}, 'b'), std::invalid_argument);
  }
  SUBCASE("planar form") {
    auto w = build_characteristic_witness({2}, 'a');
    CHECK(w.tag == 'a');
    CHECK(w.d == 2);
    CHECK(w.j.n() == 2);
    CHECK(w.j.size() == 26);
    CHECK(total_degree(w.j) == 27);
    auto w3 = build_characteristic_witness({3}, 'a');
    CHECK(w3.d == 3);
    CHECK(w3.j.size() == 6 * 3 + 14);
    CHECK(total_degree(w3.j) == 6 * 3 + 15);
  }
  SUBCASE("empty prime set") {
    auto w = build_characteristic_witness({}, 'a');
    CHECK(w.d == 1);
    CHECK(w.j.n() == 1);
    CHECK(line(w.j) == std::vector<std::uint32_t>({1, 2}));
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(build_characteristic_witness({4}, 'b'), std::invalid_argument);
    CHECK_THROWS_AS(build_characteristic_witness({2}, 'c'), std::invalid_argument);
    auto dup = build_characteristic_witness({2, 2, 3}, 'b');
    CHECK(dup.d == 6);
  }
}

TEST_CASE("verification rows, triangle form") {
  auto w = build_characteristic_witness({2}, 'b');
  std::vector<const FieldCtx*> fields{&FieldCtx::get(2, 1), &FieldCtx::get(3, 1),
                                      &FieldCtx::get(5, 1)};
  auto rows = verify_witness(w, fields, {});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].field == "2^1");
  CHECK(rows[0].check == "census");
  CHECK(rows[0].expected == "all");
  CHECK(rows[0].outcome == "all");
  CHECK(rows[0].ok);
  CHECK(rows[1].field == "3^1");
  CHECK(rows[1].expected == "empty");
  CHECK(rows[1].outcome == "empty");
  CHECK(rows[1].ok);
  CHECK(rows[2].expected == "empty");
  CHECK(rows[2].ok);
}

TEST_CASE("verification rows, planar form") {
  auto w = build_characteristic_witness({2}, 'a');
  std::vector<const FieldCtx*> fields{&FieldCtx::get(2, 1), &FieldCtx::get(3, 1),
                                      &FieldCtx::get(5, 1)};
  auto rows = verify_witness(w, fields, {});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].check == "product_pair");
  CHECK(rows[0].expected == "absent");
  CHECK(rows[0].outcome == "absent");
  CHECK(rows[0].ok);
  CHECK(rows[1].expected == "present");
  CHECK(rows[1].outcome == "present");
  CHECK(rows[1].ok);
  CHECK(rows[2].outcome == "present");
  CHECK(rows[2].ok);
}

TEST_CASE("verification rows, unconditional family") {
  auto w = build_characteristic_witness({}, 'a');
  std::vector<const FieldCtx*> fields{&FieldCtx::get(2, 1), &FieldCtx::get(7, 1)};
  auto rows = verify_witness(w, fields, {});
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.check == "census");
    CHECK(r.expected == "all");
    CHECK(r.outcome == "all");
    CHECK(r.ok);
  }
}
