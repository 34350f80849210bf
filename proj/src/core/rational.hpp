#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace esskel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical rendering: "p/q" with q >= 1 and gcd(p, q) = 1, sign on the
// numerator. Integers render with denominator 1 ("3/1", "0/1").
std::string to_fraction(const Rational& r);

// Accepts "p/q" or a bare (possibly negative) integer. Throws Error(parse)
// on malformed input or a zero/negative denominator.
Rational parse_fraction(std::string_view text);

}  // namespace esskel
