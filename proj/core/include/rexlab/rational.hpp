#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rexlab {

// Compare with Rational(k), not a bare integer: boost 1.74's mixed
// operator== recurses forever under C++20's rewritten comparisons.
using Rational = boost::rational<std::int64_t>;

// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& r);
// Accepts "p", "p/q" and finite decimals such as "0.2" or "-1.25".
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);

} // namespace rexlab
