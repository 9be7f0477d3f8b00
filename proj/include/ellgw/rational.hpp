#ifndef ELLGW_RATIONAL_HPP
#define ELLGW_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ellgw
{

// Arbitrary-precision rational in lowest terms. GMP keeps mpq_class canonical
// as long as every value is created through the helpers below (or through
// arithmetic on canonical values).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);

// Inverse of to_string. Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

} // namespace ellgw

#endif
