#pragma once

#include "zhat/exact_matrix.hpp"
#include "zhat/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace zhat {

/// Q(x) = sum_t d[t] * (x_t + sum_{u<t} mu[t][u] * x_u)^2, obtained by completing squares
/// from the last coordinate down. Enumeration then fixes x_0 first.
struct QuadraticDecomposition {
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> mu;
};

/// nullopt if `q` is not symmetric positive definite.
std::optional<QuadraticDecomposition> decomposePositiveDefinite(const ExactMatrix& q);

struct IntegerInterval {
  Integer lo;
  Integer hi;
  bool empty() const { return lo > hi; }
};

/// All integers y with d * (y - center)^2 <= radius, for d > 0. Empty if radius < 0.
IntegerInterval integerRangeWithin(const Rational& d, const Rational& center, const Rational& radius);

using EllipsoidVisitor = std::function<void(const IntVector& x, const Rational& value)>;
/// Optional per-coordinate filter; rejected values prune the whole subtree.
using CoordinateFilter = std::function<bool(std::size_t index, const Integer& value)>;

/// Visits every x in Z^n with Q(x - center) <= bound, lexicographically (x_0 slowest).
void enumerateEllipsoid(const QuadraticDecomposition& form, const RationalVector& center,
                        const Rational& bound, const EllipsoidVisitor& visit,
                        const CoordinateFilter& filter = {});

using CosetVisitor = std::function<void(const IntVector& ell, const Rational& q)>;

/// Visits each l in rep + 2M Z^s with Q(l) = -l^T M^-1 l <= bound exactly once, in
/// lexicographic order of n where l = rep + 2Mn. Throws NotNegativeDefinite.
void enumerateCosetUnderBound(const ExactMatrix& m, const IntVector& rep, const Rational& bound,
                              const CosetVisitor& visit);
std::vector<IntVector> enumerateCosetUnderBound(const ExactMatrix& m, const IntVector& rep,
                                                const Rational& bound);

/// -l^T M^-1 l given M^-1.
Rational negatedInverseForm(const ExactMatrix& mInverse, const IntVector& ell);

}  // namespace zhat
