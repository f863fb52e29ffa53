#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hopfhg {

using Integer = mpz_class;
/// Exact rational; every value produced by this library is kept canonical
/// (reduced, positive denominator, zero as 0/1).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exp);

/// (-1)^k as +1 or -1.
inline int sign_power(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace hopfhg
