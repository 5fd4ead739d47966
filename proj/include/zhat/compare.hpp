#pragma once

#include "zhat/brieskorn.hpp"
#include "zhat/qseries.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace zhat {

struct ComparisonRow {
  Triple triple;
  Rational delta0;
  std::optional<Integer> dValue;
  /// leading terms of the normalized tail; truncationOrder is the last shown exponent
  QSeries seriesPrefix;
  /// Delta0 - (1/2 - d) in Z when d is known, otherwise Delta0 - 1/2 in Z.
  bool mod1Check = false;
  std::size_t vertexCount = 0;
  /// which operation produced the delta0 / d / series cells
  std::string provenance;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

/// d of +1 surgery on T(p,p+1), i.e. -floor(p/2)(floor(p/2)+1), as tabulated for
/// Sigma(p, p+1, p(p+1)-1).
Integer dCorrectionFamily(const Integer& p);

struct Mod1Result {
  bool holds = false;
  /// delta - (1/2 - d)
  Rational offset;
};

Mod1Result checkMod1Relation(const Rational& delta, const Rational& d);
bool homologySphereDeltaCheck(const Rational& delta);

/// Sigma(p, pq-1, pq+1) with p even, q odd, or Sigma(p, pq+1, pq+2) with p odd: families
/// known to be homology cobordant to S^3 (d = 0). Recognized, not proven.
bool knownHomologyCobordantToS3(const Triple& t);

struct SharpnessReplay {
  /// offsets n in Delta = n + 1/2 - d for the witnesses used
  std::vector<std::pair<std::string, Rational>> offsets;
  /// positive x dividing every offset
  std::vector<Integer> xCandidates;
};

/// Divisor argument over the given witnesses (name, Delta, d); offsets must be integers.
SharpnessReplay replaySharpness(const std::vector<std::tuple<std::string, Rational, Rational>>& witnesses);

/// Quoted datum for S^3_{-1/2}(4_1): Delta_0 = -1/2, d = 0 (not recomputed here).
inline constexpr const char* kFigureEightSurgeryName = "S^3_{-1/2}(4_1)";
Rational figureEightSurgeryDelta0();
Rational figureEightSurgeryD();

struct CounterexampleEntry {
  std::string name;
  Rational delta0;
  QSeries prefix;
  std::string source;
};

struct CounterexampleReport {
  std::vector<CounterexampleEntry> entries;
  bool pairwiseIntegerDifferences = false;
  bool allDistinct = false;
  bool mod1Agrees = false;
  Rational commonMod1;
  std::string citedFact;
};

CounterexampleReport counterexampleReport(const Rational& order = Rational(100));
std::string formatReport(const CounterexampleReport& r);

enum class TableId { DFamily, BrieskornBatch, HomCobFamily, Batch };

/// "d-family", "brieskorn-batch", "hom-cob-family", "batch"; nullopt otherwise.
std::optional<TableId> parseTableId(const std::string& id);
std::string tableIdName(TableId id);

struct TableParams {
  long pMin = 3;
  long pMax = 6;
  /// rows for TableId::Batch
  std::vector<Triple> triples;
  /// prefix length for rows without a built-in length
  std::size_t defaultPrefixTerms = 6;
};

/// Built-in rows of the brieskorn-batch and hom-cob-family tables with their prefix lengths.
std::vector<std::pair<Triple, std::size_t>> builtinRows(TableId id);

/// Recomputes every row through the Brieskorn pipeline.
std::vector<ComparisonRow> generateTable(TableId id, const TableParams& params = {});

/// Row for one triple: Delta0 and the first `terms` tail terms (order grown until enough).
ComparisonRow comparisonRow(const Triple& t, std::size_t terms,
                            std::optional<Integer> d = std::nullopt);

/// One "b1 b2 b3" triple per line; '#' comments and blank lines skipped. Throws FormatError.
std::vector<Triple> parseTripleFile(const std::string& text);

std::string rowsToCsv(const std::vector<ComparisonRow>& rows);
std::string rowsToText(const std::vector<ComparisonRow>& rows);

}  // namespace zhat
