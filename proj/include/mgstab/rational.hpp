#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mgstab {

// All stability arithmetic is exact; no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);

long long to_long(const Int& n);

/// Parses "p", "-p", or "p/q" (q > 0 after normalisation). Throws Errc::ParseError.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_string(const Rational& q);

} // namespace mgstab
