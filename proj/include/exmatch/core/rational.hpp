#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace exmatch {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "3/4", "-2", "0.125", "1e-3" → exact rational.
Rational parse_rational(const std::string& text);

std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);
double to_double(const Rational& q);

/// p ≤ 2^(-exponent), decided exactly for p ≥ 0 and a rational exponent.
bool at_most_power_of_two(const Rational& p, const Rational& exponent_neg);

}  // namespace exmatch
