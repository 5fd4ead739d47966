#pragma once

#include "zhat/exact_matrix.hpp"
#include "zhat/plumbing.hpp"
#include "zhat/qseries.hpp"

#include <vector>

namespace zhat {

/// A Spin^c structure as a vector in 2Z^s + delta, with its class index in [0, |det M|).
struct SpinCRep {
  IntVector vector;
  Integer classIndex = 0;

  friend bool operator==(const SpinCRep&, const SpinCRep&) = default;
};

/// Zhat_a = delta-shifted tail: Zhat_a(q) = q^delta * tail(q). The tail already carries the
/// (-1)^pi sign and any 2^-eta denominators; 2^eta * tail has integer coefficients.
/// truncationOrder counts exponent steps above delta.
struct ZhatResult {
  SpinCRep spinc;
  Rational delta;
  QSeries tail;
  unsigned long etaPow2 = 0;
  int prefactorSign = 1;
  Rational truncationOrder;

  friend bool operator==(const ZhatResult&, const ZhatResult&) = default;
};

enum class EnumerationStrategy {
  /// l-space search restricted to the support of the vertex factors.
  SupportPruned,
  /// every coset point l = a + 2Mn under the bound, enumerated in n.
  FullCoset,
};

struct ZhatOptions {
  EnumerationStrategy strategy = EnumerationStrategy::SupportPruned;
  /// Experimental: accept weakly negative definite plumbings (SupportPruned only).
  bool allowWeaklyNegativeDefinite = false;
};

/// One canonical representative per class of (2Z^s + delta) / 2MZ^s, ordered by class index.
std::vector<SpinCRep> spinCRepresentatives(const ExactMatrix& m, const std::vector<int>& delta);

/// Canonical representative of the class of `a`. Throws InvalidSpinC if a - delta is not even.
SpinCRep reduceSpinC(const ExactMatrix& m, const std::vector<int>& delta, const IntVector& a);

/// The class of -a.
SpinCRep conjugateSpinC(const SpinCRep& a, const ExactMatrix& m, const std::vector<int>& delta);

/// Coefficient of z^k in the principal-value expansion of (z - 1/z)^(2 - deg).
Rational vertexFactorCoefficient(int deg, const Integer& k);

/// `order` is the number of exponent steps kept above the leading exponent.
/// Throws NotNegativeDefinite, EmptySeries, InvalidSpinC.
ZhatResult computeZhat(const PlumbingGraph& g, const SpinCRep& a, const Rational& order,
                       const ZhatOptions& options = {});

Rational deltaA(const PlumbingGraph& g, const SpinCRep& a, const ZhatOptions& options = {});

Rational deltaOrientationReversal(const Rational& delta);

}  // namespace zhat
