#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace moduli {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or "p" with optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, else "p/q" in lowest terms.
std::string format_rational(const Rational& r);

Integer floor_of(const Rational& r);

// r - floor(r), always in [0, 1).
Rational fractional_part(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Nearest dyadic k / 2^bits to value.
Rational dyadic_round(double value, unsigned bits);

}  // namespace moduli
