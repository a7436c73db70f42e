#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mteam {

/// Multiplicities and team sizes. Unbounded, so products of counts never overflow.
using Count = boost::multiprecision::cpp_int;

/// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Count numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Count denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "n" for integral values, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Count& c);

/// Parses "n" or "n/d" with optional leading '-'. Throws InputError.
Rational parse_rational(std::string_view text);

/// Parses a nonnegative decimal integer. Throws InputError.
Count parse_count(std::string_view text);

}  // namespace mteam
