#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wtrees {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// n! as an exact integer.
Integer factorial(unsigned n);

// Renders "p" for integers and "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with p, q positive decimal integers.  Throws
// Error(Errc::parse) with the offending character position on bad input.
Rational parse_positive_rational(std::string_view text);

// Least common multiple of the denominators, i.e. the smallest l such that
// l * w is an integer for every w.  Returns 1 for an empty list.
Integer denominator_lcm(const std::vector<Rational>& ws);

}  // namespace wtrees
