#include "newt/support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace newt {

Exponent exp_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = (std::uint64_t)a[i] + b[i];
    if (s > kMaxCoord) throw std::overflow_error("exponent coordinate overflow");
    r[i] = (std::uint32_t)s;
  }
  return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw std::domain_error("exponent subtraction underflow");
    r[i] = a[i] - b[i];
  }
  return r;
}

Exponent exp_scale(const Exponent& a, std::uint32_t s) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = (std::uint64_t)a[i] * s;
    if (v > kMaxCoord) throw std::overflow_error("exponent coordinate overflow");
    r[i] = (std::uint32_t)v;
  }
  return r;
}

Exponent exp_div(const Exponent& a, std::uint32_t s) {
  if (s == 0) throw std::domain_error("exponent division by zero");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] % s) throw std::domain_error("exponent not divisible");
    r[i] = a[i] / s;
  }
  return r;
}

bool exp_leq(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

long long dot(const Exponent& a, const std::vector<long long>& f) {
  if (a.size() != f.size()) throw std::invalid_argument("functional dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * f[i];
  return s;
}

std::uint32_t exp_gcd(const Exponent& a) {
  std::uint32_t g = 0;
  for (auto x : a.c) g = std::gcd(g, x);
  return g;
}

Support::Support(std::size_t n, std::vector<Exponent> points) : n_(n), points_(std::move(points)) {
  if (n_ == 0 || n_ > kMaxVars) throw std::invalid_argument("bad ambient dimension");
  if (points_.empty()) throw std::invalid_argument("empty support");
  for (const auto& p : points_) {
    if (p.size() != n_) throw std::invalid_argument("point dimension mismatch");
    for (auto x : p.c)
      if (x > kMaxCoord) throw std::overflow_error("exponent coordinate overflow");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Support::contains(const Exponent& e) const {
  return std::binary_search(points_.begin(), points_.end(), e);
}

Exponent inf_point(const Support& s) {
  Exponent r = s[0];
  for (const auto& p : s.points())
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], p[i]);
  return r;
}

std::pair<Support, Exponent> normalize(const Support& s) {
  Exponent shift = inf_point(s);
  std::vector<Exponent> pts;
  pts.reserve(s.size());
  for (const auto& p : s.points()) pts.push_back(exp_sub(p, shift));
  return {Support(s.n(), std::move(pts)), shift};
}

Support minkowski_sum(const Support& s1, const Support& s2) {
  if (s1.n() != s2.n()) throw std::invalid_argument("support dimension mismatch");
  std::vector<Exponent> pts;
  pts.reserve(s1.size() * s2.size());
  for (const auto& a : s1.points())
    for (const auto& b : s2.points()) pts.push_back(exp_add(a, b));
  return Support(s1.n(), std::move(pts));
}

long long total_degree(const Support& s) {
  long long d = 0;
  for (const auto& p : s.points()) d = std::max(d, p.total());
  return d;
}

Support min_face(const Support& s, const std::vector<long long>& f) {
  long long best = dot(s[0], f);
  for (const auto& p : s.points()) best = std::min(best, dot(p, f));
  std::vector<Exponent> pts;
  for (const auto& p : s.points())
    if (dot(p, f) == best) pts.push_back(p);
  return Support(s.n(), std::move(pts));
}

std::vector<Exponent> segment_lattice_points(const Exponent& i, const Exponent& j) {
  if (i.size() != j.size()) throw std::invalid_argument("exponent dimension mismatch");
  if (i == j) return {i};
  std::vector<Exponent> out;
  // Walk from i toward j in gcd steps; handle either orientation coordinatewise.
  std::vector<long long> delta(i.size());
  std::uint32_t g = 0;
  for (std::size_t t = 0; t < i.size(); ++t) {
    delta[t] = (long long)j[t] - (long long)i[t];
    g = std::gcd(g, (std::uint32_t)std::llabs(delta[t]));
  }
  for (std::uint32_t a = 0; a <= g; ++a) {
    Exponent p(i.size());
    for (std::size_t t = 0; t < i.size(); ++t)
      p[t] = (std::uint32_t)((long long)i[t] + delta[t] / g * (long long)a);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace newt
