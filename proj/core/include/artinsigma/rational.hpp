#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace artinsigma {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n", "-n" or "n/d" (d != 0). Throws InputError otherwise.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" string (den > 0, lowest terms, "n/1" for integers).
std::string rational_string(const Rational& value);

}  // namespace artinsigma
