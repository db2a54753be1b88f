#pragma once

#include <cstdint>
#include <compare>
#include <vector>

namespace newt {

// Exponent vectors live in N^n. Coordinates are bounded so that sums and
// inner products with 64-bit functionals stay exact.
inline constexpr std::uint32_t kMaxCoord = 1u << 20;
inline constexpr std::size_t kMaxVars = 64;

struct Exponent {
  std::vector<std::uint32_t> c;

  Exponent() = default;
  explicit Exponent(std::size_t n) : c(n, 0) {}
  Exponent(std::initializer_list<std::uint32_t> v) : c(v) {}

  std::size_t size() const { return c.size(); }
  std::uint32_t operator[](std::size_t i) const { return c[i]; }
  std::uint32_t& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }

  long long total() const {
    long long s = 0;
    for (auto x : c) s += x;
    return s;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // Lexicographic; the canonical order for supports and candidate scans.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    return a.c <=> b.c;
  }
};

Exponent exp_add(const Exponent& a, const Exponent& b);
// Requires a >= b coordinatewise.
Exponent exp_sub(const Exponent& a, const Exponent& b);
Exponent exp_scale(const Exponent& a, std::uint32_t s);
// Exact division by s; error if some coordinate is not divisible.
Exponent exp_div(const Exponent& a, std::uint32_t s);
bool exp_leq(const Exponent& a, const Exponent& b);  // coordinatewise
long long dot(const Exponent& a, const std::vector<long long>& f);
// gcd of all coordinates (0 for the zero vector).
std::uint32_t exp_gcd(const Exponent& a);

// A finite set of exponent vectors, canonically sorted lex ascending and
// deduplicated. Always nonempty.
class Support {
 public:
  Support(std::size_t n, std::vector<Exponent> points);

  std::size_t n() const { return n_; }
  const std::vector<Exponent>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Exponent& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const Exponent& e) const;

  friend bool operator==(const Support&, const Support&) = default;
  friend std::strong_ordering operator<=>(const Support& a, const Support& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.points_ <=> b.points_;
  }

 private:
  std::size_t n_;
  std::vector<Exponent> points_;
};

// Coordinatewise minimum of all points.
Exponent inf_point(const Support& s);
// (translated support, applied shift): subtracts inf so the result has inf 0.
std::pair<Support, Exponent> normalize(const Support& s);
// {a + b : a in s1, b in s2}, deduplicated.
Support minkowski_sum(const Support& s1, const Support& s2);
// max over points of the coordinate sum.
long long total_degree(const Support& s);
// Subset of s minimizing the integer functional f.
Support min_face(const Support& s, const std::vector<long long>& f);
// All lattice points on the segment [i, j]: i + (alpha/d)(j - i) for
// alpha = 0..d, d = gcd of the coordinates of j - i. i = j gives {i}.
std::vector<Exponent> segment_lattice_points(const Exponent& i, const Exponent& j);

}  // namespace newt
