#include "newt/lp.hpp"

#include "doctest.h"

using namespace newt;

using Row = std::vector<Rational>;

TEST_CASE("feasibility of simple equality systems") {
  // x1 + x2 = 2, x1 - x2 = 0 has x = (1,1) >= 0.
  CHECK(lp_feasible({Row{Rational(1), Rational(1)}, Row{Rational(1), Rational(-1)}},
                    {Rational(2), Rational(0)}));
  // x1 + x2 = -1 with x >= 0 is infeasible.
  CHECK(!lp_feasible({Row{Rational(1), Rational(1)}}, {Rational(-1)}));
  // x1 - x2 = -3 is fine: x = (0,3).
  CHECK(lp_feasible({Row{Rational(1), Rational(-1)}}, {Rational(-3)}));
  // x1 = 1 and x1 = 2 conflict.
  CHECK(!lp_feasible({Row{Rational(1)}, Row{Rational(1)}}, {Rational(1), Rational(2)}));
  // Empty system is trivially feasible.
  CHECK(lp_feasible({}, {}));
}

TEST_CASE("convex hull membership in 3d") {
  std::vector<std::vector<long long>> simplex = {
      {0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
  CHECK(in_convex_hull({1, 1, 1}, simplex));
  CHECK(in_convex_hull({0, 0, 0}, simplex));
  CHECK(in_convex_hull({3, 0, 0}, simplex));
  CHECK(in_convex_hull({1, 1, 0}, simplex));
  CHECK(!in_convex_hull({2, 2, 2}, simplex));
  CHECK(!in_convex_hull({4, 0, 0}, simplex));
  CHECK(!in_convex_hull({0, 0, 4}, simplex));
}

TEST_CASE("hull membership needs rational weights") {
  // (1,1) is inside conv{(0,0),(2,0),(1,3)} only with fractional weights.
  std::vector<std::vector<long long>> tri = {{0, 0}, {2, 0}, {1, 3}};
  CHECK(in_convex_hull({1, 1}, tri));
  CHECK(!in_convex_hull({0, 3}, tri));
}

TEST_CASE("edge recognition on a tetrahedron") {
  std::vector<std::vector<long long>> tet = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  int edges = 0;
  for (std::size_t i = 0; i < tet.size(); ++i)
    for (std::size_t j = i + 1; j < tet.size(); ++j)
      if (is_edge_pair(tet[i], tet[j], tet)) ++edges;
  CHECK(edges == 6);
}

TEST_CASE("diagonals of an octahedron are not edges") {
  std::vector<std::vector<long long>> oct = {
      {0, 1, 1}, {2, 1, 1}, {1, 0, 1}, {1, 2, 1}, {1, 1, 0}, {1, 1, 2}};
  CHECK(is_edge_pair(oct[0], oct[2], oct));
  CHECK(!is_edge_pair(oct[0], oct[1], oct));  // opposite pair
  CHECK(!is_edge_pair(oct[2], oct[3], oct));  // opposite pair
  int edges = 0;
  for (std::size_t i = 0; i < oct.size(); ++i)
    for (std::size_t j = i + 1; j < oct.size(); ++j)
      if (is_edge_pair(oct[i], oct[j], oct)) ++edges;
  CHECK(edges == 12);
}
