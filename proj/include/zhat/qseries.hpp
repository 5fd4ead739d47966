#pragma once

#include "zhat/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace zhat {

/// Sparse series sum c_e q^e with rational exponents and coefficients. Every exponent up to
/// truncationOrder is fully determined; no order means the series is exact (a polynomial).
class QSeries {
 public:
  using Terms = std::map<Rational, Rational>;

  QSeries() = default;
  explicit QSeries(std::optional<Rational> truncationOrder, Integer denominatorHint = 1);

  static QSeries monomial(const Rational& coeff, const Rational& exponent);

  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& truncationOrder() const { return order_; }
  const Integer& exponentDenominatorHint() const { return hint_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of q^e; zero when absent.
  Rational coefficient(const Rational& exponent) const;

  /// Accumulates c q^e. Terms above the truncation order are dropped; zeros are erased.
  void addTerm(const Rational& exponent, const Rational& coeff);

  /// Lowers the truncation order, dropping terms above it.
  QSeries truncatedTo(const Rational& order) const;

  void setExponentDenominatorHint(Integer hint) { hint_ = std::move(hint); }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Terms terms_;
  std::optional<Rational> order_;
  Integer hint_ = 1;
};

/// Termwise sum; the result is known up to the smaller truncation order.
QSeries add(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& factor);
QSeries negate(const QSeries& a);
QSeries shiftExponent(const QSeries& a, const Rational& r);

struct NormalizedSeries {
  Rational delta;
  QSeries tail;  ///< a * q^-delta
  unsigned long etaPow2 = 0;
};

/// Throws EmptySeries when no term survives.
NormalizedSeries leadingExponentAndNormalize(const QSeries& a);

/// sum over n >= 0 with n^2/4p <= order of psi(n) q^{n^2/4p}, psi(n) = +1 for n = a mod 2p
/// and -1 for n = -a mod 2p.
QSeries falseTheta(const Integer& p, const Integer& a, const Rational& order);

/// "1 - q^7 - q^9 + q^20", with " + ..." appended for truncated series when `ellipsis`.
std::string toText(const QSeries& s, bool ellipsis = true);
/// Text for the first `count` terms only; " + ..." follows whenever terms are omitted or
/// the series is truncated.
std::string prefixText(const QSeries& s, std::size_t count);
std::string exponentText(const Rational& e);

}  // namespace zhat
