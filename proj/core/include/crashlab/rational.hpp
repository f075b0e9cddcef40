#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace crashlab {

// Exact arithmetic for costs, capacities and ratios. Min-cut comparisons and
// approximation-ratio assertions must never see a rounding tie.
using Rational = boost::multiprecision::cpp_rational;

// Parses "12", "-3", "10.25", "1e2" is rejected, "21/2" is accepted.
// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

// Integers print bare ("28"), terminating decimals print as decimals
// ("9.5"), anything else prints as a reduced fraction ("19/27").
std::string format_rational(const Rational& value);

// Always a reduced fraction, e.g. "7/5" or "3".
std::string format_fraction(const Rational& value);

// Fixed-point rendering with `digits` decimals, for human-facing columns.
std::string format_decimal(const Rational& value, int digits = 6);

double to_double(const Rational& value);

// 1/1 + 1/2 + ... + 1/k.
Rational harmonic(int k);

// 1 - ((k-1)/k)^k, the greedy k-LIS guarantee.
Rational klis_ratio_bound(int k);

}  // namespace crashlab
