#include "moduli/rational.hpp"

#include <cmath>

#include "moduli/errors.hpp"

namespace moduli {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  }
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer den(std::string{den_text});
  if (den == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor_of(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational fractional_part(const Rational& r) { return r - Rational(floor_of(r)); }

Rational dyadic_round(double value, unsigned bits) {
  const double scaled = std::ldexp(value, static_cast<int>(bits));
  const auto k = static_cast<long long>(std::llround(scaled));
  return Rational(Integer(k), Integer(1) << bits);
}

}  // namespace moduli
