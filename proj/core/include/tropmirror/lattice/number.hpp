#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropmirror {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with q != 0. Throws Error(MalformedInput).
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" (q > 0, lowest terms) otherwise.
std::string format_rational(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Integer abs(const Integer& value);
double to_double(const Rational& value);

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace tropmirror
