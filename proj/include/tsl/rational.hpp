#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsl {

/// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "3", "-1/2", "2/4" (reduced). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// r = 1/n for an integer n ≥ k.
bool in_harmonic_tail(const Rational& r, const BigInt& k);

}  // namespace tsl
