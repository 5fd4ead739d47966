#include "test_support.hpp"

#include "zhat/compare.hpp"
#include "zhat/errors.hpp"

using namespace zhat;

TEST_CASE("d-invariants of the surgery family") {
  CHECK(dCorrectionFamily(3) == -2);
  CHECK(dCorrectionFamily(4) == -6);
  CHECK(dCorrectionFamily(5) == -6);
  CHECK(dCorrectionFamily(6) == -12);
  CHECK_THROWS_AS(dCorrectionFamily(1), std::invalid_argument);
}

TEST_CASE("mod 1 relation") {
  CHECK(checkMod1Relation(Rational(1, 2), -2).holds);
  CHECK(checkMod1Relation(Rational(9, 2), 0).holds);
  const Mod1Result fig8 = checkMod1Relation(Rational(-1, 2), 0);
  CHECK(fig8.holds);
  CHECK(fig8.offset == -1);
  CHECK_FALSE(checkMod1Relation(Rational(1, 3), 0).holds);
  CHECK(homologySphereDeltaCheck(Rational(9, 2)));
  CHECK(homologySphereDeltaCheck(Rational(13, 2)));
  CHECK_FALSE(homologySphereDeltaCheck(Rational(1, 3)));
}

TEST_CASE("families known to bound") {
  CHECK(knownHomologyCobordantToS3({2, 9, 11}));
  CHECK(knownHomologyCobordantToS3({3, 7, 8}));
  CHECK(knownHomologyCobordantToS3({2, 13, 15}));
  CHECK_FALSE(knownHomologyCobordantToS3({2, 3, 7}));
  CHECK_FALSE(knownHomologyCobordantToS3({2, 11, 13}));
}

TEST_CASE("sharpness of the mod 1 statement") {
  std::vector<std::tuple<std::string, Rational, Rational>> w{
      {"Sigma(2,9,11)", Rational(9, 2), 0}, {"Sigma(3,7,8)", Rational(13, 2), 0}};
  SharpnessReplay r = replaySharpness(w);
  CHECK(r.offsets[0].second == 4);
  CHECK(r.offsets[1].second == 6);
  CHECK(r.xCandidates == std::vector<Integer>{1, 2});
  w.emplace_back(kFigureEightSurgeryName, figureEightSurgeryDelta0(), figureEightSurgeryD());
  r = replaySharpness(w);
  CHECK(r.offsets[2].second == -1);
  CHECK(r.xCandidates == std::vector<Integer>{1});
  CHECK_THROWS_AS(replaySharpness({{"bad", Rational(1, 3), 0}}), std::invalid_argument);
}

TEST_CASE("counterexample report") {
  const CounterexampleReport r = counterexampleReport();
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[0].delta0 == Rational(-1, 2));
  CHECK(r.entries[1].delta0 == Rational(9, 2));
  CHECK(r.entries[2].delta0 == Rational(13, 2));
  CHECK(r.pairwiseIntegerDifferences);
  CHECK(r.allDistinct);
  CHECK(r.mod1Agrees);
  CHECK(r.commonMod1 == Rational(1, 2));
  const std::string text = formatReport(r);
  CHECK(text.find("Sigma(2,9,11): delta0 = 9/2") != std::string::npos);
  CHECK(text.find("1 - q^7 - q^9 + q^20 - q^79") != std::string::npos);
}

TEST_CASE("table ids") {
  CHECK(parseTableId("d-family") == TableId::DFamily);
  CHECK(parseTableId("hom-cob-family") == TableId::HomCobFamily);
  CHECK_FALSE(parseTableId("nope"));
  for (TableId id : {TableId::DFamily, TableId::BrieskornBatch, TableId::HomCobFamily,
                     TableId::Batch}) {
    CHECK(parseTableId(tableIdName(id)) == id);
  }
  CHECK(builtinRows(TableId::BrieskornBatch).size() == 10);
  CHECK(builtinRows(TableId::HomCobFamily).size() == 9);
}

TEST_CASE("d-family table") {
  const auto rows = generateTable(TableId::DFamily);
  REQUIRE(rows.size() == 4);
  const Rational want[] = {Rational(1, 2), Rational(37, 2), Rational(141, 2), Rational(361, 2)};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].delta0 == want[i]);
    CHECK(rows[i].mod1Check);
    CHECK(rows[i].dValue);
  }
  CHECK(rows[0].triple == Triple{3, 4, 11});
  CHECK(toText(rows[0].seriesPrefix, false) == "1 - q^5 - q^19 - q^29");
  CHECK(rows[1].seriesPrefix.size() == 6);

  TableParams narrow;
  narrow.pMin = 4;
  narrow.pMax = 4;
  CHECK(generateTable(TableId::DFamily, narrow).size() == 1);
}

TEST_CASE("single rows and batches") {
  const ComparisonRow r = comparisonRow({17, 41, 87}, 6);
  CHECK(r.delta0 == Rational(24801, 2));
  CHECK(r.vertexCount == 103);
  CHECK_FALSE(r.dValue);
  CHECK(r.mod1Check);

  const ComparisonRow r2 = comparisonRow({2, 21, 23}, 4);
  CHECK(r2.delta0 == Rational(81, 2));
  CHECK(toText(r2.seriesPrefix, false) == "1 - q^19 - q^21 + q^44");

  TableParams params;
  params.triples = parseTripleFile("# two rows\n2 9 11\n\n3 7 8\n");
  params.defaultPrefixTerms = 3;
  const auto rows = generateTable(TableId::Batch, params);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].delta0 == Rational(13, 2));
  CHECK(rowsToCsv(rows) ==
        "triple,delta0,d,series\n"
        "\"(2,9,11)\",9/2,,1 - q^7 - q^9 + ...\n"
        "\"(3,7,8)\",13/2,,1 - q^11 - q^13 + ...\n");
  CHECK(rowsToText(rows).find("Sigma(3,7,8)  delta0 = 13/2") != std::string::npos);
  CHECK_THROWS_AS(parseTripleFile("2 9\n"), FormatError);
  CHECK_THROWS_AS(parseTripleFile("2 9 x\n"), FormatError);
}
