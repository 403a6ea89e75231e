#pragma once

// Exact integer and rational arithmetic. Every threshold decision in the
// library goes through these types; no floating point is used for decisions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hcube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders as "p/q" (always with a denominator, e.g. "16/1").
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

BigInt ipow(const BigInt& base, std::uint64_t exponent);
Rational ipow(const Rational& base, std::uint64_t exponent);

inline BigInt pow2(std::uint64_t exponent) { return BigInt(1) << exponent; }

BigInt binomial(unsigned n, unsigned k);

/// Largest integer x with x^k <= value (value >= 0, k >= 1).
BigInt integer_root_floor(const BigInt& value, unsigned k);

}  // namespace hcube
