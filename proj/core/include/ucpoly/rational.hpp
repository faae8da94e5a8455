#ifndef UCPOLY_RATIONAL_HPP
#define UCPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ucpoly {

/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

/// Clamps an integer-valued GMP quantity into an int; throws
/// std::overflow_error when it does not fit.
int to_int(const Integer& value);

}  // namespace ucpoly

#endif  // UCPOLY_RATIONAL_HPP
