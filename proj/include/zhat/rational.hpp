#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zhat {

using Integer = mpz_class;
/// Exact rational; gmp keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

Rational makeRational(const Integer& num, const Integer& den);

/// Renders `num/den`, or just `num` when the denominator is 1.
std::string toString(const Rational& r);
std::string toString(const Integer& z);

/// Parses `num` or `num/den`. Throws FormatError on malformed input or a zero denominator.
Rational parseRational(std::string_view text);
Integer parseInteger(std::string_view text);

bool isInteger(const Rational& r);
Integer floorOf(const Rational& r);
Integer ceilOf(const Rational& r);
/// floor(sqrt(r)) for r >= 0.
Integer floorSqrt(const Rational& r);

/// Largest k with 2^k dividing the denominator; -1 if the denominator has an odd factor.
long dyadicExponent(const Rational& r);

Integer gcdOf(const Integer& a, const Integer& b);
Integer lcmOf(const Integer& a, const Integer& b);
Integer absOf(const Integer& z);

}  // namespace zhat
