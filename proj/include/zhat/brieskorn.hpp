#pragma once

#include "zhat/plumbing.hpp"
#include "zhat/rational.hpp"
#include "zhat/zhat_engine.hpp"

#include <array>
#include <optional>
#include <vector>

namespace zhat {

using Triple = std::array<Integer, 3>;

/// Solution of p*b + sum (p/b_i) a_i = -1.
struct SeifertData {
  Integer b;
  std::array<Integer, 3> a;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

struct BrieskornData {
  Triple triple;
  SeifertData seifert;
  Integer p;
  std::array<Integer, 4> alphas;
  std::array<std::vector<Integer>, 3> legFractions;
  std::array<Integer, 3> h;
  std::size_t vertexCount = 0;
  Integer trace;
  Rational xi;
  Rational delta0;

  friend bool operator==(const BrieskornData&, const BrieskornData&) = default;
};

/// Throws InvalidTriple unless 2 <= b1 < b2 < b3 are pairwise coprime.
void validateTriple(const Triple& t);
bool isExcludedTriple(const Triple& t);

/// Canonical solution with 0 < a_i < b_i. Throws InvalidTriple.
SeifertData solveSeifertData(const Triple& t);

/// Throws InvalidSeifertData unless b < 0, every a_i > 0, gcd(a_i, b_i) = 1 and the equation
/// holds exactly.
void verifySeifertData(const Triple& t, const SeifertData& s);

/// num/den = k1 - 1/(k2 - ...) with every k_i >= 2. Requires 0 < den < num coprime; throws
/// InvalidFraction.
std::vector<Integer> hjContinuedFraction(const Integer& num, const Integer& den);

/// Same ceiling-division expansion for any coprime num, den > 0. When den > num the first
/// entry is 1.
std::vector<Integer> legContinuedFraction(const Integer& num, const Integer& den);

/// Evaluates k1 - 1/(k2 - ...); throws InvalidFraction on a zero intermediate denominator.
Rational evaluateContinuedFraction(const std::vector<Integer>& ks);

std::array<Integer, 4> alphas(const Triple& t);

struct BrieskornPlumbing {
  PlumbingGraph graph;
  /// index of the last vertex of each leg
  std::array<std::size_t, 3> terminals{};
};

/// Center (weight b) at index 0, then the vertices of legs 1, 2, 3 in order.
BrieskornPlumbing buildPlumbing(const BrieskornData& d);

struct XiDelta0 {
  std::array<Integer, 3> h;
  Rational xi;
  Rational delta0;
};

/// Throws ExcludedTriple for (2,3,5).
XiDelta0 computeXiDelta0(const BrieskornData& d, const BrieskornPlumbing& g);

/// Full pipeline. `seifert` overrides the canonical Seifert solution after verification.
BrieskornData analyzeBrieskorn(const Triple& t,
                               const std::optional<SeifertData>& seifert = std::nullopt);

/// Closed form: q^Delta0 times the false theta combination normalized to start at q^0.
ZhatResult zhat0Brieskorn(const Triple& t, const Rational& order,
                          const std::optional<SeifertData>& seifert = std::nullopt);

/// Tail only, from the false theta combination (no plumbing needed).
QSeries brieskornTail(const Triple& t, const Rational& order);

}  // namespace zhat
