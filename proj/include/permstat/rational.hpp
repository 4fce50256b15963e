#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

// Unbounded integers and rationals. Every probability and expectation in
// this library is held exactly; floating point appears only at the final
// display / comparison step.
//
// cpp_rational keeps the invariant we rely on everywhere: lowest terms,
// positive denominator, so operator== is canonical-form equality.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with any signs, canonicalized. Throws DomainError if den == 0.
Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(long long num, long long den) {
    return make_rational(Int(num), Int(den));
}

// Canonical "p/q" form, e.g. "34/9", "-1/12", "0/1". Lossless.
std::string to_fraction_string(const Rational& value);

// Parses "p/q" or a bare integer "p". Inverse of to_fraction_string.
// Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Decimal rendering for display, correctly rounded to `digits` significant
// digits (round half away from zero), trailing zeros stripped. Falls back to
// scientific notation ("d.dd...e-12") outside a fixed-point-friendly range.
std::string to_decimal_string(const Rational& value, int digits = 30);

double to_double(const Rational& value);

} // namespace permstat
