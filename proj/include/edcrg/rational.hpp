#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace edcrg {

using BigInt = boost::multiprecision::cpp_int;
// Expression templates off so arithmetic yields Rational directly (plays
// well with std::min/std::max initializer lists and auto).
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

double to_double(const Rational& r);

// Accepts "a/b", integers and decimals ("0.3", "1e-9", "-2.5e3").
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// As parse_rational, but additionally requires the value to lie in [0,1].
Rational parse_probability(const std::string& text);

// Exact square root when the argument is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

// Decimal rendering with enough digits to round-trip a double.
std::string to_decimal_string(const Rational& r);

// "a/b" (or just "a" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

}  // namespace edcrg
