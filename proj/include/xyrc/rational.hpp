#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace xyrc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optional leading '-'); throws std::invalid_argument on
/// malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, q > 0 (integers print as "p/1").
std::string format_rational(const Rational& value);

std::string format_bigint(const BigInt& value);

double to_double(const Rational& value);

/// n! with a process-wide cache; n is small in every caller.
BigInt factorial(std::uint64_t n);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// N! / (a! b! c! d!) with a + b + c + d == N.
BigInt multinomial4(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

Rational pow(const Rational& base, std::uint64_t exponent);

}  // namespace xyrc
