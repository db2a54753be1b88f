#pragma once

#include <vector>

#include "newt/rational.hpp"

namespace newt {

// Exact feasibility of {x >= 0 : Ax = b} via phase-1 simplex with Bland's
// rule (terminating, all-rational pivots). Desk-scale sizes only.
bool lp_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

// x in conv(points)? Coordinates as integer vectors.
bool in_convex_hull(const std::vector<long long>& x,
                    const std::vector<std::vector<long long>>& points);

// Is [v, w] a 1-face of conv(vertices)? Certified by a functional that is
// zero on w - v and >= 1 on every other vertex difference.
bool is_edge_pair(const std::vector<long long>& v, const std::vector<long long>& w,
                  const std::vector<std::vector<long long>>& vertices);

}  // namespace newt
