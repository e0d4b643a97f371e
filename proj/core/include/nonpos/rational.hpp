#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nonpos {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always kept in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) {
    return q.sign();
}

inline bool is_integral(const Rational& q) {
    return denominator(q) == 1;
}

/// Parses "p" or "p/q" (q > 0 after normalisation). Throws InputError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

} // namespace nonpos
