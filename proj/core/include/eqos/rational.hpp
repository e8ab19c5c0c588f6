#ifndef EQOS_RATIONAL_HPP
#define EQOS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace eqos {

// Exact arbitrary-precision rational, always reduced, denominator > 0.
// Backed by boost::multiprecision; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Make a rational from an integer pair, normalizing the sign into the
/// numerator.  Throws std::invalid_argument on zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parse "p" or "p/q" with q > 0 (grammar: rational = integer |
/// integer "/" positive-integer).  Throws std::invalid_argument on
/// anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

using QVector = std::vector<Rational>;

}  // namespace eqos

#endif
