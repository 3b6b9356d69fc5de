#pragma once

// Exact scalars. Everything in the library computes over the rationals.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace schubert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
Integer binomial(unsigned long n, unsigned long k);

/// Integer power of a rational, pow(q, 0) = 1.
Rational power(const Rational& q, unsigned exponent);

using RationalVector = std::vector<Rational>;

}  // namespace schubert
