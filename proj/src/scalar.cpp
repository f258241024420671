#include "swdon/scalar.hpp"

#include "swdon/error.hpp"

#include <cctype>

namespace swdon {

std::string to_string(const Rational& value) {
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

std::string to_string(const Integer& value) { return value.str(); }

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text))
    throw Error(ErrorCode::ParseError, "malformed integer '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer to_integer(const Rational& value) {
  if (!is_integral(value))
    throw Error(ErrorCode::HypothesisViolation, "expected an integer, got " + to_string(value));
  return mp::numerator(value);
}

Integer mod(const Integer& value, long modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Rational power_of_two(long exponent) {
  Integer p = 1;
  p <<= static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace swdon
