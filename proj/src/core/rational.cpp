#include "exmatch/core/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace exmatch {

namespace {

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const Rational a = parse_rational(text.substr(0, slash));
    const Rational b = parse_rational(text.substr(slash + 1));
    if (boost::multiprecision::denominator(a) != 1 || boost::multiprecision::denominator(b) != 1)
      throw std::invalid_argument("bad fraction '" + text + "'");
    const BigInt num = boost::multiprecision::numerator(a);
    const BigInt den = boost::multiprecision::numerator(b);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  std::string mant = text;
  long exp10 = 0;
  const auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = text.substr(0, epos);
    exp10 = std::stol(text.substr(epos + 1));
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad number '" + text + "'");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("bad number '" + text + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number '" + text + "'");
  // a leading 0 would make the BigInt constructor read octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt num(digits);
  if (neg) num = -num;
  const long shift = exp10 - frac_digits;
  if (shift >= 0) return Rational(num * pow10(shift));
  return Rational(num, pow10(-shift));
}

std::string numerator_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str();
}

std::string denominator_string(const Rational& q) {
  return boost::multiprecision::denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool at_most_power_of_two(const Rational& p, const Rational& exponent_neg) {
  if (p < 0) throw std::invalid_argument("probability must be non-negative");
  if (p == 0) return true;
  // p ≤ 2^(-a/b)  ⇔  p^b · 2^a ≤ 1  (b > 0), with a possibly negative.
  const BigInt a = boost::multiprecision::numerator(exponent_neg);
  const BigInt b = boost::multiprecision::denominator(exponent_neg);
  const BigInt pn = boost::multiprecision::numerator(p);
  const BigInt pd = boost::multiprecision::denominator(p);
  const unsigned bexp = b.convert_to<unsigned>();
  BigInt lhs = boost::multiprecision::pow(pn, bexp);
  BigInt rhs = boost::multiprecision::pow(pd, bexp);
  if (a >= 0) {
    lhs <<= a.convert_to<unsigned>();
  } else {
    rhs <<= (-a).convert_to<unsigned>();
  }
  return lhs <= rhs;
}

}  // namespace exmatch
