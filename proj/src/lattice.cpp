#include "zhat/lattice.hpp"

#include "zhat/errors.hpp"

#include <stdexcept>

namespace zhat {

std::optional<QuadraticDecomposition> decomposePositiveDefinite(const ExactMatrix& q) {
  if (!q.isSymmetric()) return std::nullopt;
  const std::size_t n = q.size();
  ExactMatrix w = q;
  QuadraticDecomposition out;
  out.d.assign(n, Rational(0));
  out.mu.assign(n, std::vector<Rational>(n));
  for (std::size_t step = n; step-- > 0;) {
    const Rational dt = w(step, step);
    if (dt <= 0) return std::nullopt;
    out.d[step] = dt;
    for (std::size_t u = 0; u < step; ++u) out.mu[step][u] = w(u, step) / dt;
    for (std::size_t u = 0; u < step; ++u) {
      if (w(u, step) == 0) continue;
      for (std::size_t v = 0; v < step; ++v) w(u, v) -= w(u, step) * w(step, v) / dt;
    }
  }
  return out;
}

IntegerInterval integerRangeWithin(const Rational& d, const Rational& center,
                                   const Rational& radius) {
  if (radius < 0) return {Integer(1), Integer(0)};
  const Integer r = floorSqrt(radius / d);
  auto inside = [&](const Integer& y) {
    const Rational diff = Rational(y) - center;
    return d * diff * diff <= radius;
  };
  Integer lo = floorOf(center) - r - 1;
  Integer hi = ceilOf(center) + r + 1;
  while (lo <= hi && !inside(lo)) ++lo;
  while (hi >= lo && !inside(hi)) --hi;
  return {lo, hi};
}

namespace {

struct EllipsoidWalker {
  const QuadraticDecomposition& form;
  const RationalVector& center;
  const Rational& bound;
  const EllipsoidVisitor& visit;
  const CoordinateFilter& filter;
  std::size_t n;
  IntVector x;

  void walk(std::size_t t, const Rational& used) {
    if (t == n) {
      visit(x, used);
      return;
    }
    Rational shift = 0;
    for (std::size_t u = 0; u < t; ++u) {
      if (form.mu[t][u] != 0) shift += form.mu[t][u] * (Rational(x[u]) - center[u]);
    }
    const Rational localCenter = center[t] - shift;
    const IntegerInterval range = integerRangeWithin(form.d[t], localCenter, bound - used);
    for (Integer y = range.lo; y <= range.hi; ++y) {
      if (filter && !filter(t, y)) continue;
      const Rational diff = Rational(y) - localCenter;
      x[t] = y;
      walk(t + 1, used + form.d[t] * diff * diff);
    }
  }
};

}  // namespace

void enumerateEllipsoid(const QuadraticDecomposition& form, const RationalVector& center,
                        const Rational& bound, const EllipsoidVisitor& visit,
                        const CoordinateFilter& filter) {
  const std::size_t n = form.d.size();
  if (center.size() != n) throw std::invalid_argument("enumerateEllipsoid: center size mismatch");
  if (bound < 0) return;
  EllipsoidWalker walker{form, center, bound, visit, filter, n, IntVector(n)};
  walker.walk(0, Rational(0));
}

Rational negatedInverseForm(const ExactMatrix& mInverse, const IntVector& ell) {
  const RationalVector y = mInverse.apply(std::span<const Integer>(ell));
  Rational q = 0;
  for (std::size_t i = 0; i < ell.size(); ++i) q -= Rational(ell[i]) * y[i];
  return q;
}

void enumerateCosetUnderBound(const ExactMatrix& m, const IntVector& rep, const Rational& bound,
                              const CosetVisitor& visit) {
  const std::size_t s = m.size();
  if (rep.size() != s) throw std::invalid_argument("enumerateCosetUnderBound: rep size mismatch");
  if (!m.isIntegral()) throw std::invalid_argument("enumerateCosetUnderBound: M must be integral");
  // l = rep + 2Mn = 2M(n - n0) with n0 = -M^-1 rep / 2, so Q(l) = (n - n0)^T (-4M) (n - n0).
  const auto form = decomposePositiveDefinite(m.scaled(Rational(-4)));
  if (!form) throw NotNegativeDefinite("linking matrix is not negative definite");
  const ExactMatrix mInv = inverse(m);
  RationalVector n0 = mInv.apply(std::span<const Integer>(rep));
  for (Rational& c : n0) c /= -2;
  enumerateEllipsoid(*form, n0, bound, [&](const IntVector& n, const Rational& value) {
    IntVector ell = rep;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (n[j] != 0) ell[i] += 2 * m(i, j).get_num() * n[j];
      }
    }
    visit(ell, value);
  });
}

std::vector<IntVector> enumerateCosetUnderBound(const ExactMatrix& m, const IntVector& rep,
                                                const Rational& bound) {
  std::vector<IntVector> out;
  enumerateCosetUnderBound(m, rep, bound,
                           [&](const IntVector& ell, const Rational&) { out.push_back(ell); });
  return out;
}

}  // namespace zhat
