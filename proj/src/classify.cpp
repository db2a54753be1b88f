#include "newt/classify.hpp"

#include <numeric>

namespace newt {

std::optional<std::size_t> check_common_variable(const Support& I) {
  for (std::size_t t = 0; t < I.n(); ++t) {
    bool all = true;
    for (const auto& p : I.points()) {
      if (p[t] < 1) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    if (I.size() == 1) {
      // exclude the singleton {e_t}
      const Exponent& p = I.points()[0];
      bool is_unit = p[t] == 1;
      for (std::size_t s = 0; s < I.n() && is_unit; ++s)
        if (s != t && p[s] != 0) is_unit = false;
      if (is_unit) continue;
    }
    return t;
  }
  return std::nullopt;
}

namespace {

// signed delta j - i
std::vector<long long> delta(const Exponent& i, const Exponent& j) {
  std::vector<long long> d(i.size());
  for (std::size_t t = 0; t < i.size(); ++t)
    d[t] = static_cast<long long>(j[t]) - static_cast<long long>(i[t]);
  return d;
}

bool parallel(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t)
      if (a[s] * b[t] != a[t] * b[s]) return false;
  return true;
}

}  // namespace

std::optional<std::tuple<Exponent, Exponent, std::uint32_t>> check_segment(const Support& I) {
  if (I.size() < 2) return std::nullopt;
  const Exponent& i = I.points().front();  // lex-min
  const Exponent& j = I.points().back();   // lex-max
  auto dir = delta(i, j);
  for (const auto& p : I.points()) {
    if (!parallel(delta(i, p), dir)) return std::nullopt;
  }
  std::uint32_t d = 0;
  for (std::size_t t = 0; t < I.n(); ++t) {
    if (i[t] != 0 && j[t] != 0) return std::nullopt;
    d = std::gcd(d, std::gcd(i[t], j[t]));
  }
  if (d < 2) return std::nullopt;
  return std::make_tuple(i, j, d);
}

std::vector<std::uint32_t> check_prime_power(const Support& I) {
  std::uint32_t g = 0;
  for (const auto& p : I.points())
    for (std::size_t t = 0; t < I.n(); ++t) g = std::gcd(g, p[t]);
  std::vector<std::uint32_t> primes;
  if (g < 2) return primes;  // covers I = {0}, where g stays 0
  for (std::uint32_t q = 2; q * q <= g; ++q) {
    if (g % q == 0) {
      primes.push_back(q);
      while (g % q == 0) g /= q;
    }
  }
  if (g > 1) primes.push_back(g);
  return primes;
}

Classification classify(const Support& I) {
  Classification out;
  if (auto t = check_common_variable(I)) {
    out.verdict = Verdict::GoodAllFields;
    out.certificate.kind = Certificate::Kind::CommonVariable;
    out.certificate.t = *t;
    return out;
  }
  if (auto seg = check_segment(I)) {
    out.verdict = Verdict::GoodAllFields;
    out.certificate.kind = Certificate::Kind::Segment;
    std::tie(out.certificate.i, out.certificate.j, out.certificate.d) = *seg;
    return out;
  }
  auto primes = check_prime_power(I);
  if (!primes.empty()) {
    out.verdict = Verdict::GoodExactlyInChars;
    out.certificate.kind = Certificate::Kind::PrimePower;
    out.certificate.primes = primes;
    out.primes = std::move(primes);
    return out;
  }
  out.verdict = Verdict::NeverGood;
  return out;
}

}  // namespace newt
