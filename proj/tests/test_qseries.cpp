#include "test_support.hpp"

#include "zhat/errors.hpp"
#include "zhat/qseries.hpp"

using namespace zhat;

namespace {

QSeries poly(std::initializer_list<std::pair<Rational, Rational>> terms,
             std::optional<Rational> order = std::nullopt) {
  QSeries s(order);
  for (const auto& [e, c] : terms) s.addTerm(e, c);
  return s;
}

// psi(n) straight from the residue rule, without the two-progression shortcut.
QSeries falseThetaOracle(long p, long a, const Rational& order) {
  QSeries s(order);
  for (long n = 0; makeRational(n * n, 4 * p) <= order; ++n) {
    int c = 0;
    if (((n - a) % (2 * p) + 2 * p) % (2 * p) == 0) ++c;
    if (((n + a) % (2 * p) + 2 * p) % (2 * p) == 0) --c;
    if (c != 0) s.addTerm(makeRational(n * n, 4 * p), c);
  }
  return s;
}

}  // namespace

TEST_CASE("addition cancels and keeps the smaller order") {
  const QSeries x = QSeries::monomial(1, Rational(1, 2));
  CHECK(add(x, negate(x)).empty());
  CHECK(add(x, QSeries()) == x);
  const QSeries a = poly({{0, 1}, {5, 2}}, Rational(10));
  const QSeries b = poly({{0, -1}, {3, 1}}, Rational(4));
  const QSeries s = add(a, b);
  CHECK(s.truncationOrder() == Rational(4));
  CHECK(s.size() == 1);
  CHECK(s.coefficient(3) == 1);
  CHECK(s.coefficient(5) == 0);
}

TEST_CASE("terms above the order are dropped") {
  QSeries s(Rational(2));
  s.addTerm(3, 1);
  s.addTerm(2, 1);
  CHECK(s.size() == 1);
  CHECK(s.truncatedTo(1).empty());
  CHECK(s.truncatedTo(1).truncationOrder() == Rational(1));
}

TEST_CASE("exponent shifts") {
  const QSeries s = poly({{0, 1}, {7, -1}});
  const QSeries t = shiftExponent(s, Rational(9, 2));
  CHECK(t.coefficient(Rational(9, 2)) == 1);
  CHECK(t.coefficient(Rational(23, 2)) == -1);
  CHECK(shiftExponent(s, 0) == s);
  const QSeries u = shiftExponent(poly({{1, 1}}, Rational(4)), 2);
  CHECK(u.truncationOrder() == Rational(6));
  CHECK(shiftExponent(QSeries::monomial(1, Rational(9, 8)), Rational(-9, 8)).terms() ==
        QSeries::monomial(1, 0).terms());
  CHECK(scale(s, 2).coefficient(7) == -2);
}

TEST_CASE("normalization") {
  const NormalizedSeries s3 =
      leadingExponentAndNormalize(poly({{Rational(1, 2), 2}, {Rational(-1, 2), -2}}));
  CHECK(s3.delta == Rational(-1, 2));
  CHECK(s3.tail == poly({{0, -2}, {1, 2}}));
  CHECK(s3.etaPow2 == 0);

  const NormalizedSeries half = leadingExponentAndNormalize(QSeries::monomial(Rational(1, 2), 3));
  CHECK(half.delta == 3);
  CHECK(half.tail.coefficient(0) == Rational(1, 2));
  CHECK(half.etaPow2 == 1);

  CHECK(leadingExponentAndNormalize(QSeries::monomial(Rational(3, 8), 1)).etaPow2 == 3);
  CHECK_THROWS_AS(leadingExponentAndNormalize(QSeries()), EmptySeries);
  CHECK_THROWS_AS(leadingExponentAndNormalize(QSeries::monomial(Rational(1, 3), 0)),
                  std::domain_error);
}

TEST_CASE("false theta against the residue rule") {
  const QSeries f = falseTheta(198, 59, 300);
  CHECK(f.terms() == falseThetaOracle(198, 59, 300).terms());
  CHECK(f.terms().begin()->first == Rational(3481, 792));
  CHECK(f.terms().begin()->second == 1);
  const NormalizedSeries n = leadingExponentAndNormalize(f);
  CHECK(n.tail.coefficient(0) == 1);
  CHECK(n.tail.coefficient(139) == -1);
  CHECK(n.tail.coefficient(257) == 1);
  for (const auto& [e, c] : n.tail.terms()) CHECK(isInteger(e));

  // p | a: n = a carries both signs
  CHECK(falseTheta(5, 5, 20).coefficient(Rational(25, 20)) == 0);
  CHECK(falseTheta(5, 5, 20).terms() == falseThetaOracle(5, 5, 20).terms());
  for (long a = -7; a <= 17; ++a) CHECK(falseTheta(6, a, 40).terms() == falseThetaOracle(6, a, 40).terms());
}

TEST_CASE("text rendering") {
  CHECK(toText(poly({{0, 1}, {7, -1}, {9, -1}, {20, 1}})) == "1 - q^7 - q^9 + q^20");
  CHECK(toText(poly({{0, -2}, {1, 2}}, Rational(3))) == "-2 + 2q + ...");
  CHECK(toText(poly({{0, -2}, {1, 2}}, Rational(3)), false) == "-2 + 2q");
  CHECK(toText(poly({{3, Rational(1, 2)}})) == "(1/2)q^3");
  CHECK(toText(poly({{Rational(-1, 2), 2}})) == "2q^{-1/2}");
  CHECK(toText(QSeries()) == "0");
  CHECK(prefixText(poly({{0, 1}, {1, 1}, {2, 1}}), 2) == "1 + q + ...");
  CHECK(exponentText(Rational(9, 2)) == "{9/2}");
  CHECK(exponentText(4) == "4");
}
