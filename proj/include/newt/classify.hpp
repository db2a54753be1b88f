#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "newt/support.hpp"

namespace newt {

// Verdict for a support set I: does every polynomial with support exactly I
// split into two nonconstant factors over an algebraically closed field?
enum class Verdict {
  GoodAllFields,       // yes, regardless of characteristic
  GoodExactlyInChars,  // yes exactly when the characteristic lies in `primes`
  NeverGood,           // no: some member is irreducible over every closure
};

struct Certificate {
  enum class Kind { None, CommonVariable, Segment, PrimePower };

  Kind kind = Kind::None;
  std::size_t t = 0;      // CommonVariable: variable index (0-based)
  Exponent i, j;          // Segment: endpoints, lex-min first
  std::uint32_t d = 0;    // Segment: gcd of all endpoint coordinates
  std::vector<std::uint32_t> primes;  // PrimePower: sorted, distinct
};

struct Classification {
  Verdict verdict = Verdict::NeverGood;
  Certificate certificate;
  std::vector<std::uint32_t> primes;  // nonempty iff GoodExactlyInChars
};

// Smallest variable index t such that every point of I has t-th coordinate
// at least 1 and I is not the singleton {e_t}.
std::optional<std::size_t> check_common_variable(const Support& I);

// All points collinear on a lattice segment [i, j] whose endpoints have
// disjoint coordinate supports (i_t * j_t = 0 for all t) and whose combined
// coordinate gcd d exceeds 1. Returns (i, j, d) with i lex-min, j lex-max.
// Singletons never qualify.
std::optional<std::tuple<Exponent, Exponent, std::uint32_t>> check_segment(const Support& I);

// Primes p such that every coordinate of every point is divisible by p.
// Empty for I = {0} and whenever the overall gcd is 1.
std::vector<std::uint32_t> check_prime_power(const Support& I);

// Preference order: common variable, then segment, then prime power.
Classification classify(const Support& I);

}  // namespace newt
