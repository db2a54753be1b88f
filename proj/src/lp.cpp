#include "newt/lp.hpp"

#include <cstddef>

namespace newt {

bool lp_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t m = A.size();
  if (m == 0) return true;
  const std::size_t n = A[0].size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < Rational(0)) {
      for (auto& x : A[i]) x = -x;
      b[i] = -b[i];
    }
  // Phase 1: artificial basis, minimize the artificial sum. Reduced cost of
  // column j is -sum_i A[i][j]; objective starts at sum_i b[i].
  std::vector<Rational> d(n);
  Rational z(0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m; ++i) s += A[i][j];
    d[j] = -s;
  }
  for (std::size_t i = 0; i < m; ++i) z += b[i];
  // basis[i] = column index of the basic variable in row i; row i's artificial
  // ranks as n + i (artificials never re-enter). Distinct ranks keep Bland's
  // rule cycle-free.
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j < n; ++j)
      if (d[j] < Rational(0)) { enter = j; break; }  // Bland: smallest index
    if (enter == SIZE_MAX) break;
    std::size_t leave = SIZE_MAX;
    Rational best(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(A[i][enter] > Rational(0))) continue;
      Rational ratio = b[i] / A[i][enter];
      if (leave == SIZE_MAX || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == SIZE_MAX) break;  // unbounded below: cannot happen in phase 1
    Rational piv = A[leave][enter];
    for (std::size_t j = 0; j < n; ++j) A[leave][j] /= piv;
    b[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || A[i][enter].is_zero()) continue;
      Rational f = A[i][enter];
      for (std::size_t j = 0; j < n; ++j) A[i][j] -= f * A[leave][j];
      b[i] -= f * b[leave];
    }
    Rational f = d[enter];
    for (std::size_t j = 0; j < n; ++j) d[j] -= f * A[leave][j];
    z += f * b[leave];
    basis[leave] = enter;
  }
  return z.is_zero();
}

bool in_convex_hull(const std::vector<long long>& x,
                    const std::vector<std::vector<long long>>& points) {
  const std::size_t n = x.size();
  const std::size_t s = points.size();
  if (s == 0) return false;
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(s));
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) A[i][j] = Rational(points[j][i]);
    b[i] = Rational(x[i]);
  }
  for (std::size_t j = 0; j < s; ++j) A[n][j] = Rational(1);
  b[n] = Rational(1);
  return lp_feasible(std::move(A), std::move(b));
}

bool is_edge_pair(const std::vector<long long>& v, const std::vector<long long>& w,
                  const std::vector<std::vector<long long>>& vertices) {
  const std::size_t n = v.size();
  std::vector<std::vector<long long>> others;
  for (const auto& u : vertices)
    if (u != v && u != w) others.push_back(u);
  // Columns: a+ (n), a- (n), one slack per strict inequality.
  const std::size_t cols = 2 * n + others.size();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> eq(cols, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    eq[i] = Rational(w[i] - v[i]);
    eq[n + i] = -Rational(w[i] - v[i]);
  }
  A.push_back(eq);
  b.push_back(Rational(0));
  for (std::size_t u = 0; u < others.size(); ++u) {
    std::vector<Rational> row(cols, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = Rational(others[u][i] - v[i]);
      row[n + i] = -Rational(others[u][i] - v[i]);
    }
    row[2 * n + u] = Rational(-1);
    A.push_back(row);
    b.push_back(Rational(1));
  }
  return lp_feasible(std::move(A), std::move(b));
}

}  // namespace newt
