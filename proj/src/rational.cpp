#include "eigensteps/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "eigensteps/errors.hpp"

namespace eigensteps {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer p = parse_integer(text.substr(0, slash), text);
  const Integer q = parse_integer(text.substr(slash + 1), text);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
  return Rational(value);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational limit_denominator(const Rational& value, const Integer& max_denominator) {
  if (max_denominator < 1) throw DomainError("denominator bound must be at least 1");
  if (denominator(value) <= max_denominator) return value;

  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = numerator(value), d = denominator(value);
  while (true) {
    // floor division; d > 0 throughout
    Integer a = n / d;
    if (n < 0 && a * d != n) a -= 1;
    const Integer q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    const Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Integer r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  const Integer k = (max_denominator - q0) / q1;
  const Rational bound1(p0 + k * p1, q0 + k * q1);
  const Rational bound2(p1, q1);
  if (abs(bound2 - value) <= abs(bound1 - value)) return bound2;
  return bound1;
}

}  // namespace eigensteps
