#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordinal {

// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "n", "-n", "n/d" (d != 0). Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise, always in lowest terms.
std::string to_string(const Rational& r);

}  // namespace ordinal
