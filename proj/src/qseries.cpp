#include "zhat/qseries.hpp"

#include "zhat/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace zhat {

QSeries::QSeries(std::optional<Rational> truncationOrder, Integer denominatorHint)
    : order_(std::move(truncationOrder)), hint_(std::move(denominatorHint)) {
  if (hint_ <= 0) throw std::invalid_argument("exponent denominator hint must be positive");
}

QSeries QSeries::monomial(const Rational& coeff, const Rational& exponent) {
  QSeries s;
  s.addTerm(exponent, coeff);
  return s;
}

Rational QSeries::coefficient(const Rational& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSeries::addTerm(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  if (order_ && exponent > *order_) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

QSeries QSeries::truncatedTo(const Rational& order) const {
  QSeries out(order_ ? std::min(*order_, order) : order, hint_);
  for (const auto& [e, c] : terms_) out.addTerm(e, c);
  return out;
}

QSeries add(const QSeries& a, const QSeries& b) {
  std::optional<Rational> order = a.truncationOrder();
  if (b.truncationOrder()) {
    order = order ? std::min(*order, *b.truncationOrder()) : *b.truncationOrder();
  }
  QSeries out(order, lcmOf(a.exponentDenominatorHint(), b.exponentDenominatorHint()));
  for (const auto& [e, c] : a.terms()) out.addTerm(e, c);
  for (const auto& [e, c] : b.terms()) out.addTerm(e, c);
  return out;
}

QSeries scale(const QSeries& a, const Rational& factor) {
  QSeries out(a.truncationOrder(), a.exponentDenominatorHint());
  for (const auto& [e, c] : a.terms()) out.addTerm(e, c * factor);
  return out;
}

QSeries negate(const QSeries& a) { return scale(a, Rational(-1)); }

QSeries shiftExponent(const QSeries& a, const Rational& r) {
  std::optional<Rational> order;
  if (a.truncationOrder()) order = *a.truncationOrder() + r;
  Integer hint = lcmOf(a.exponentDenominatorHint(), r.get_den());
  QSeries out(order, hint);
  for (const auto& [e, c] : a.terms()) out.addTerm(e + r, c);
  return out;
}

NormalizedSeries leadingExponentAndNormalize(const QSeries& a) {
  if (a.empty()) throw EmptySeries("no term survives below the truncation order");
  NormalizedSeries out;
  out.delta = a.terms().begin()->first;
  out.tail = shiftExponent(a, -out.delta);
  Integer hint = 1;
  for (const auto& [e, c] : out.tail.terms()) hint = lcmOf(hint, e.get_den());
  out.tail.setExponentDenominatorHint(hint);
  long eta = 0;
  for (const auto& [e, c] : a.terms()) {
    const long k = dyadicExponent(c);
    if (k < 0) throw std::domain_error("coefficient " + toString(c) + " is not dyadic");
    eta = std::max(eta, k);
  }
  out.etaPow2 = static_cast<unsigned long>(eta);
  return out;
}

QSeries falseTheta(const Integer& p, const Integer& a, const Rational& order) {
  if (p < 1) throw std::invalid_argument("falseTheta: p must be positive");
  const Integer period = 2 * p;
  const Integer fourP = 4 * p;
  QSeries out(order, fourP);
  if (order < 0) return out;
  const Integer nMax = floorSqrt(order * Rational(fourP));
  auto sweep = [&](Integer residue, int sign) {
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), period.get_mpz_t());
    for (Integer n = residue; n <= nMax; n += period) {
      out.addTerm(makeRational(n * n, fourP), Rational(sign));
    }
  };
  sweep(a, 1);
  sweep(Integer(-a), -1);
  return out;
}

std::string exponentText(const Rational& e) {
  if (isInteger(e) && e >= 0) return e.get_str();
  return "{" + e.get_str() + "}";
}

namespace {

void appendTerm(std::string& out, const Rational& e, const Rational& c, bool first) {
  const bool negative = c < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const bool constant = e == 0;
  if (mag != 1 || constant) {
    out += isInteger(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
  }
  if (constant) return;
  out += "q";
  if (e != 1) out += "^" + exponentText(e);
}

}  // namespace

std::string prefixText(const QSeries& s, std::size_t count) {
  std::string out;
  std::size_t written = 0;
  for (const auto& [e, c] : s.terms()) {
    if (written == count) break;
    appendTerm(out, e, c, written == 0);
    ++written;
  }
  if (written == 0) out = "0";
  if (written < s.size() || s.truncationOrder()) out += " + ...";
  return out;
}

std::string toText(const QSeries& s, bool ellipsis) {
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    appendTerm(out, e, c, first);
    first = false;
  }
  if (first) out = "0";
  if (ellipsis && s.truncationOrder()) out += " + ...";
  return out;
}

}  // namespace zhat
