#include "zhat/compare.hpp"

#include "zhat/errors.hpp"

#include <sstream>

namespace zhat {

Integer dCorrectionFamily(const Integer& p) {
  if (p < 2) throw std::invalid_argument("dCorrectionFamily needs p >= 2");
  const Integer half = p / 2;
  return -half * (half + 1);
}

Mod1Result checkMod1Relation(const Rational& delta, const Rational& d) {
  Mod1Result r;
  r.offset = delta - (Rational(1, 2) - d);
  r.holds = isInteger(r.offset);
  return r;
}

bool homologySphereDeltaCheck(const Rational& delta) { return isInteger(delta - Rational(1, 2)); }

bool knownHomologyCobordantToS3(const Triple& t) {
  const Integer& p = t[0];
  if (mpz_even_p(p.get_mpz_t())) {
    // Sigma(p, pq-1, pq+1), q odd
    if (t[2] - t[1] != 2) return false;
    const Integer pq = t[1] + 1;
    if (!mpz_divisible_p(pq.get_mpz_t(), p.get_mpz_t())) return false;
    const Integer q = pq / p;
    return mpz_odd_p(q.get_mpz_t()) != 0;
  }
  // Sigma(p, pq+1, pq+2)
  if (t[2] - t[1] != 1) return false;
  const Integer pq = t[1] - 1;
  return pq > 0 && mpz_divisible_p(pq.get_mpz_t(), p.get_mpz_t());
}

SharpnessReplay replaySharpness(
    const std::vector<std::tuple<std::string, Rational, Rational>>& witnesses) {
  SharpnessReplay out;
  Integer g = 0;
  for (const auto& [name, delta, d] : witnesses) {
    const Mod1Result r = checkMod1Relation(delta, d);
    if (!r.holds) throw std::invalid_argument(name + ": Delta - (1/2 - d) is not an integer");
    out.offsets.emplace_back(name, r.offset);
    g = gcdOf(g, r.offset.get_num());
  }
  if (g == 0) return out;  // every offset zero: any x works, no finite candidate list
  for (Integer x = 1; x <= g; ++x) {
    if (mpz_divisible_p(g.get_mpz_t(), x.get_mpz_t())) out.xCandidates.push_back(x);
  }
  return out;
}

Rational figureEightSurgeryDelta0() { return Rational(-1, 2); }
Rational figureEightSurgeryD() { return Rational(0); }

namespace {

std::string tripleName(const Triple& t) {
  return "Sigma(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

QSeries firstTerms(const QSeries& s, std::size_t n) {
  QSeries out;
  std::size_t k = 0;
  Rational last = 0;
  for (const auto& [e, c] : s.terms()) {
    if (k++ == n) break;
    out.addTerm(e, c);
    last = e;
  }
  out = out.truncatedTo(last);
  return out;
}

}  // namespace

CounterexampleReport counterexampleReport(const Rational& order) {
  CounterexampleReport r;
  const PlumbingGraph s3({-1}, {});
  const ZhatResult zs3 = computeZhat(s3, SpinCRep{{Integer(0)}, 0}, order);
  r.entries.push_back({"S^3", zs3.delta, firstTerms(zs3.tail, 5), "computeZhat on the graph (-1)"});
  for (const Triple& t : {Triple{2, 9, 11}, Triple{3, 7, 8}}) {
    const ZhatResult z = zhat0Brieskorn(t, order);
    r.entries.push_back({tripleName(t), z.delta, firstTerms(z.tail, 5), "zhat0Brieskorn"});
  }
  r.pairwiseIntegerDifferences = true;
  r.allDistinct = true;
  r.mod1Agrees = true;
  r.commonMod1 = r.entries.front().delta0 - floorOf(r.entries.front().delta0);
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const Rational& di = r.entries[i].delta0;
    if (di - floorOf(di) != r.commonMod1) r.mod1Agrees = false;
    for (std::size_t j = i + 1; j < r.entries.size(); ++j) {
      const Rational diff = di - r.entries[j].delta0;
      if (!isInteger(diff)) r.pairwiseIntegerDifferences = false;
      if (diff == 0) r.allDistinct = false;
    }
  }
  r.citedFact =
      "Sigma(2,9,11) and Sigma(3,7,8) are homology cobordant to S^3 (cited, not computed)";
  return r;
}

std::string formatReport(const CounterexampleReport& r) {
  std::ostringstream out;
  out << "Delta_0 under homology cobordism\n";
  for (const auto& e : r.entries) {
    out << "  " << e.name << ": delta0 = " << toString(e.delta0)
        << ", Zhat_0 = q^" << exponentText(e.delta0) << " * (" << prefixText(e.prefix, 5)
        << ")  [" << e.source << "]\n";
  }
  out << "  " << r.citedFact << "\n";
  out << "  pairwise differences integral: " << (r.pairwiseIntegerDifferences ? "yes" : "no")
      << "\n";
  out << "  values distinct: " << (r.allDistinct ? "yes" : "no") << "\n";
  out << "  delta0 mod 1 common value: " << toString(r.commonMod1)
      << (r.mod1Agrees ? "" : " (NOT shared)") << "\n";
  out << "  => Delta_0 is not a homology cobordism invariant, while Delta_0 mod 1 agrees\n";
  return out.str();
}

std::optional<TableId> parseTableId(const std::string& id) {
  if (id == "d-family") return TableId::DFamily;
  if (id == "brieskorn-batch") return TableId::BrieskornBatch;
  if (id == "hom-cob-family") return TableId::HomCobFamily;
  if (id == "batch") return TableId::Batch;
  return std::nullopt;
}

std::string tableIdName(TableId id) {
  switch (id) {
    case TableId::DFamily: return "d-family";
    case TableId::BrieskornBatch: return "brieskorn-batch";
    case TableId::HomCobFamily: return "hom-cob-family";
    case TableId::Batch: return "batch";
  }
  return "?";
}

std::vector<std::pair<Triple, std::size_t>> builtinRows(TableId id) {
  switch (id) {
    case TableId::BrieskornBatch:
      return {{{8, 35, 93}, 6},   {{17, 41, 87}, 6},  {{17, 53, 100}, 5}, {{29, 50, 69}, 5},
              {{29, 53, 96}, 5},  {{31, 61, 63}, 5},  {{35, 61, 97}, 5},  {{39, 41, 94}, 6},
              {{41, 51, 95}, 5},  {{42, 43, 95}, 6}};
    case TableId::HomCobFamily:
      return {{{2, 13, 15}, 6}, {{2, 21, 23}, 4}, {{2, 81, 83}, 6},
              {{4, 11, 13}, 7}, {{4, 59, 61}, 6}, {{6, 17, 19}, 6},
              {{6, 41, 43}, 6}, {{8, 23, 25}, 6}, {{8, 87, 89}, 6}};
    default: return {};
  }
}

ComparisonRow comparisonRow(const Triple& t, std::size_t terms, std::optional<Integer> d) {
  ComparisonRow row;
  row.triple = t;
  const BrieskornData data = analyzeBrieskorn(t);
  row.delta0 = data.delta0;
  row.vertexCount = data.vertexCount;
  Rational order = 200;
  QSeries tail = brieskornTail(t, order);
  while (tail.size() < terms) {
    order *= 2;
    tail = brieskornTail(t, order);
  }
  row.seriesPrefix = firstTerms(tail, terms);
  row.provenance = "delta0: computeXiDelta0; series: falseTheta combination";
  if (d) {
    row.dValue = d;
    row.mod1Check = checkMod1Relation(row.delta0, Rational(*d)).holds;
    row.provenance += "; d: dCorrectionFamily";
  } else {
    row.mod1Check = homologySphereDeltaCheck(row.delta0);
  }
  return row;
}

std::vector<ComparisonRow> generateTable(TableId id, const TableParams& params) {
  std::vector<ComparisonRow> rows;
  switch (id) {
    case TableId::DFamily: {
      static const std::size_t kTerms[] = {4, 6, 5, 5};
      if (params.pMin < 2) throw InvalidTriple("d-family needs p >= 2");
      for (long p = params.pMin; p <= params.pMax; ++p) {
        const std::size_t terms =
            (p >= 3 && p <= 6) ? kTerms[p - 3] : params.defaultPrefixTerms;
        const Triple t{p, p + 1, p * (p + 1) - 1};
        rows.push_back(comparisonRow(t, terms, dCorrectionFamily(p)));
      }
      break;
    }
    case TableId::BrieskornBatch:
    case TableId::HomCobFamily:
      for (const auto& [t, terms] : builtinRows(id)) rows.push_back(comparisonRow(t, terms));
      break;
    case TableId::Batch:
      for (const Triple& t : params.triples) {
        rows.push_back(comparisonRow(t, params.defaultPrefixTerms));
      }
      break;
  }
  return rows;
}

std::vector<Triple> parseTripleFile(const std::string& text) {
  std::vector<Triple> out;
  std::istringstream in(text);
  std::size_t lineNo = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineNo;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.size() != 3) {
      throw FormatError("line " + std::to_string(lineNo) + ": expected three integers");
    }
    out.push_back({parseInteger(tok[0]), parseInteger(tok[1]), parseInteger(tok[2])});
  }
  return out;
}

namespace {

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string tripleText(const Triple& t) {
  return "(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

}  // namespace

std::string rowsToCsv(const std::vector<ComparisonRow>& rows) {
  std::string out = "triple,delta0,d,series\n";
  for (const auto& r : rows) {
    out += csvField(tripleText(r.triple)) + "," + toString(r.delta0) + "," +
           (r.dValue ? r.dValue->get_str() : std::string()) + "," +
           csvField(prefixText(r.seriesPrefix, r.seriesPrefix.size())) + "\n";
  }
  return out;
}

std::string rowsToText(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << tripleName(r.triple) << "  delta0 = " << toString(r.delta0);
    if (r.dValue) out << "  d = " << r.dValue->get_str();
    out << "  mod1 " << (r.mod1Check ? "ok" : "FAIL") << "  vertices = " << r.vertexCount
        << "\n    Zhat_0 = q^" << exponentText(r.delta0) << " * ("
        << prefixText(r.seriesPrefix, r.seriesPrefix.size()) << ")\n";
  }
  return out.str();
}

}  // namespace zhat
