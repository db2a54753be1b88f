#pragma once

#include <cstdint>

#include "newt/classify.hpp"
#include "newt/poly.hpp"

namespace newt {

// A verified splitting p = left * right into nonconstant factors. Both live
// over the same field, an extension of the input's field of the given degree
// (1 when no extension was needed). The left factor has coefficient 1 at its
// lex-smallest exponent.
struct Factorization {
  Polynomial left, right;
  std::uint32_t extension = 1;
};

// Every term of p is divisible by X_t and p != c*X_t. Splits off X_t.
Factorization factor_common_variable(const Polynomial& p, std::size_t t);

// The support of p lies on the lattice segment [i, j], both endpoints carry
// nonzero coefficients, and d >= 2 divides every coordinate of i and j.
// Specializes p to one variable along the segment, splits off a root factor
// (searching extensions up to max_ext, default d), and pulls both factors
// back. Throws inconclusive_error when no root exists within max_ext.
Factorization factor_segment(const Polynomial& p, const Exponent& i, const Exponent& j,
                             std::uint32_t d, std::uint32_t max_ext = 0);

// char = prime, every exponent of p is divisible by prime, and p is not a
// constant. Extracts the unique q with q^prime = p and returns (q, q^{prime-1}).
Factorization factor_prime_power(const Polynomial& p, std::uint32_t prime);

// Dispatches on the certificate. Errors when the verdict is NeverGood or the
// field's characteristic is not among the certified primes.
Factorization factor_by_certificate(const Polynomial& p, const Classification& c,
                                    std::uint32_t max_ext = 0);

}  // namespace newt
