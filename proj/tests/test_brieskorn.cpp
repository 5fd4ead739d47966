#include "test_support.hpp"

#include "zhat/brieskorn.hpp"
#include "zhat/errors.hpp"
#include "zhat/zhat_engine.hpp"

using namespace zhat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("triple validation") {
  CHECK_NOTHROW(validateTriple({2, 9, 11}));
  CHECK_THROWS_AS(validateTriple({2, 4, 5}), InvalidTriple);
  CHECK_THROWS_AS(validateTriple({3, 2, 5}), InvalidTriple);
  CHECK_THROWS_AS(validateTriple({1, 2, 3}), InvalidTriple);
  CHECK(isExcludedTriple({2, 3, 5}));
  CHECK_FALSE(isExcludedTriple({2, 3, 7}));
  CHECK_THROWS_AS(analyzeBrieskorn({2, 3, 5}), ExcludedTriple);
}

TEST_CASE("canonical Seifert data") {
  CHECK(solveSeifertData({2, 9, 11}) == SeifertData{-1, {1, 2, 3}});
  CHECK(solveSeifertData({3, 7, 8}) == SeifertData{-1, {1, 2, 3}});
  CHECK(solveSeifertData({2, 3, 7}) == SeifertData{-1, {1, 1, 1}});
  CHECK_NOTHROW(verifySeifertData({2, 9, 11}, {-2, {1, 11, 3}}));
  CHECK_THROWS_AS(verifySeifertData({2, 9, 11}, {-1, {1, 2, 4}}), InvalidSeifertData);
  CHECK_THROWS_AS(verifySeifertData({2, 9, 11}, {1, {1, 2, 3}}), InvalidSeifertData);
  CHECK_THROWS_AS(verifySeifertData({2, 9, 11}, {-1, {1, 3, 3}}), InvalidSeifertData);
}

TEST_CASE("continued fractions") {
  CHECK(hjContinuedFraction(9, 2) == ints({5, 2}));
  CHECK(hjContinuedFraction(11, 3) == ints({4, 3}));
  CHECK(hjContinuedFraction(8, 3) == ints({3, 3}));
  CHECK(hjContinuedFraction(2, 1) == ints({2}));
  CHECK(evaluateContinuedFraction(ints({5, 2})) == Rational(9, 2));
  CHECK(evaluateContinuedFraction(ints({4, 3})) == Rational(11, 3));
  CHECK_THROWS_AS(hjContinuedFraction(4, 2), InvalidFraction);
  CHECK_THROWS_AS(hjContinuedFraction(2, 3), InvalidFraction);
  CHECK(legContinuedFraction(9, 11) == ints({1, 6, 2}));
  CHECK(evaluateContinuedFraction(legContinuedFraction(9, 11)) == Rational(9, 11));
  CHECK_THROWS_AS(evaluateContinuedFraction(ints({2, 1, 1})), InvalidFraction);
}

TEST_CASE("alphas") {
  CHECK(alphas({2, 9, 11}) == std::array<Integer, 4>{59, 95, 103, 139});
  CHECK(alphas({3, 7, 8}) == std::array<Integer, 4>{67, 109, 115, 157});
  CHECK(alphas({2, 13, 15}) == std::array<Integer, 4>{139, 191, 199, 251});
}

TEST_CASE("worked example Sigma(2,9,11)") {
  const BrieskornData d = analyzeBrieskorn({2, 9, 11});
  CHECK(d.p == 198);
  CHECK(d.vertexCount == 6);
  CHECK(d.trace == -17);
  CHECK(d.h == std::array<Integer, 3>{50, 3, 2});
  CHECK(d.xi == Rational(83, 792));
  CHECK(d.delta0 == Rational(9, 2));
  CHECK(d.legFractions[1] == ints({5, 2}));

  const BrieskornPlumbing g = buildPlumbing(d);
  CHECK(g.graph.weights() == std::vector<std::int64_t>{-1, -2, -5, -2, -4, -3});
  CHECK(g.terminals == std::array<std::size_t, 3>{1, 3, 5});
}

TEST_CASE("worked example Sigma(3,7,8)") {
  const BrieskornData d = analyzeBrieskorn({3, 7, 8});
  CHECK(d.delta0 == Rational(13, 2));
  CHECK(buildPlumbing(d).graph.weights() == std::vector<std::int64_t>{-1, -3, -4, -2, -3, -3});
}

TEST_CASE("table values of delta0") {
  CHECK(analyzeBrieskorn({8, 35, 93}).delta0 == Rational(9045, 2));
  CHECK(analyzeBrieskorn({3, 4, 11}).delta0 == Rational(1, 2));
  CHECK(analyzeBrieskorn({17, 41, 87}).delta0 == Rational(24801, 2));
}

TEST_CASE("plumbing sizes") {
  const std::pair<Triple, std::size_t> rows[] = {
      {{8, 35, 93}, 104},  {{17, 41, 87}, 103}, {{17, 53, 100}, 117}, {{29, 50, 69}, 119},
      {{29, 53, 96}, 109}, {{31, 61, 63}, 124}, {{35, 61, 97}, 117},  {{39, 41, 94}, 102},
      {{41, 51, 95}, 109}, {{42, 43, 95}, 105}, {{3, 4, 11}, 15},     {{6, 7, 41}, 48}};
  for (const auto& [t, n] : rows) CHECK(analyzeBrieskorn(t).vertexCount == n);
}

TEST_CASE("closed-form tails") {
  const ZhatResult z = zhat0Brieskorn({2, 9, 11}, 30);
  CHECK(z.delta == Rational(9, 2));
  CHECK(toText(z.tail, false) == "1 - q^7 - q^9 + q^20");
  CHECK(toText(brieskornTail({2, 13, 15}, 209), false) ==
        "1 - q^11 - q^13 + q^28 - q^167 + q^204");
  CHECK(toText(brieskornTail({3, 4, 11}, 35), false) == "1 - q^5 - q^19 - q^29 + q^30");
}

TEST_CASE("other Seifert solutions give the same answer") {
  const Triple t{2, 9, 11};
  const ZhatResult base = zhat0Brieskorn(t, 40);
  for (const SeifertData& s :
       {SeifertData{-2, {1, 11, 3}}, SeifertData{-2, {3, 2, 3}}, SeifertData{-2, {1, 2, 14}}}) {
    const BrieskornData d = analyzeBrieskorn(t, s);
    CHECK(d.delta0 == Rational(9, 2));
    const BrieskornPlumbing g = buildPlumbing(d);
    const ZhatResult z = computeZhat(g.graph, spinCRepresentatives(linkingMatrix(g.graph),
                                                                   degreeVector(g.graph))[0],
                                     40);
    CHECK(z.delta == base.delta);
    CHECK(z.tail.terms() == base.tail.terms());
  }
}
