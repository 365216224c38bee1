#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eigensteps {

/// Exact rational scalar backed by GMP. Values are always kept in lowest
/// terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q" (q != 0). The result is normalized, so "4/-6"
/// becomes -2/3.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational exact_rational(double value);

double to_double(const Rational& value);

/// Best rational approximation of `value` whose denominator does not exceed
/// `max_denominator` (continued-fraction convergents plus the best
/// semiconvergent).
Rational limit_denominator(const Rational& value, const Integer& max_denominator);

}  // namespace eigensteps
