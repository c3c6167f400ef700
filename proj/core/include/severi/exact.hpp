#pragma once

// Exact integer and rational arithmetic shared by every module. Counts grow
// super-exponentially, so nothing in the engine is ever stored in a machine
// word once it can be multiplied by a census count.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace severi {

using ExactInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient; 0 when k < 0, k > n or n < 0.
ExactInt binom(std::int64_t n, std::int64_t k);

/// n! / (a! b! (n-a-b)!); 0 when a < 0, b < 0, a + b > n or n < 0.
ExactInt multinom(std::int64_t n, std::int64_t a, std::int64_t b);

std::string to_string(const ExactInt& value);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses a base-10 integer with optional leading '-'. Throws ParseError.
ExactInt parse_exact(const std::string& text);

bool is_integer(const Rational& value);

/// Numerator of an integral rational; throws ConsistencyError otherwise.
ExactInt require_integer(const Rational& value, const std::string& what);

}  // namespace severi
