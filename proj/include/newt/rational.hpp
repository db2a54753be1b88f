#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace newt {

// Exact rational on 64-bit num/den with __int128 intermediates.
// Denominator is always positive, fraction always in lowest terms.
// Any operation whose reduced result leaves 64 bits throws std::overflow_error.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    reduce_assign(nn, dd);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = (__int128)a.num_ * b.den_;
    __int128 rhs = (__int128)b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational from128(__int128 n, __int128 d) {
    Rational r;
    if (d < 0) { n = -n; d = -d; }
    r.reduce_assign(n, d);
    return r;
  }

  void reduce_assign(__int128 n, __int128 d) {
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 0) { n /= a; d /= a; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    num_ = (long long)n;
    den_ = (long long)d;
  }

  long long num_;
  long long den_;
};

}  // namespace newt
