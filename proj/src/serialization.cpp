#include "zhat/serialization.hpp"

#include "zhat/errors.hpp"

namespace zhat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string("JSON: '") + what + "' must be a string");
  return j.get<std::string>();
}

Rational rationalField(const Json& j, const char* key) {
  return parseRational(text(field(j, key), key));
}

Integer integerField(const Json& j, const char* key) {
  return parseInteger(text(field(j, key), key));
}

Json integers(const auto& values) {
  Json arr = Json::array();
  for (const Integer& v : values) arr.push_back(v.get_str());
  return arr;
}

IntVector integerList(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string("JSON: '") + what + "' must be an array");
  IntVector out;
  for (const auto& e : j) out.push_back(parseInteger(text(e, what)));
  return out;
}

template <std::size_t N>
std::array<Integer, N> fixedIntegers(const Json& j, const char* key) {
  const IntVector v = integerList(field(j, key), key);
  if (v.size() != N) throw FormatError(std::string("JSON: '") + key + "' has the wrong length");
  std::array<Integer, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
  return out;
}

}  // namespace

Json toJson(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", toString(e)}, {"coeff", toString(c)}});
  Json j;
  j["terms"] = terms;
  j["order"] = s.truncationOrder() ? Json(toString(*s.truncationOrder())) : Json(nullptr);
  j["denominatorHint"] = s.exponentDenominatorHint().get_str();
  return j;
}

QSeries qseriesFromJson(const Json& j) {
  std::optional<Rational> order;
  const Json& o = field(j, "order");
  if (!o.is_null()) order = parseRational(text(o, "order"));
  Integer hint = 1;
  if (j.contains("denominatorHint")) hint = integerField(j, "denominatorHint");
  if (hint <= 0) throw FormatError("JSON: denominatorHint must be positive");
  QSeries s(order, hint);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw FormatError("JSON: 'terms' must be an array");
  for (const auto& t : terms) {
    const Rational e = rationalField(t, "exp");
    const Rational c = rationalField(t, "coeff");
    if (c == 0) throw FormatError("JSON: zero coefficient stored");
    if (order && e > *order) throw FormatError("JSON: term above the truncation order");
    if (s.coefficient(e) != 0) throw FormatError("JSON: repeated exponent");
    s.addTerm(e, c);
  }
  return s;
}

Json toJson(const SpinCRep& a) {
  return Json{{"vector", integers(a.vector)}, {"classIndex", a.classIndex.get_str()}};
}

SpinCRep spinCFromJson(const Json& j) {
  return SpinCRep{integerList(field(j, "vector"), "vector"), integerField(j, "classIndex")};
}

Json toJson(const ZhatResult& r) {
  Json j;
  j["spinc"] = toJson(r.spinc);
  j["delta"] = toString(r.delta);
  j["tail"] = toJson(r.tail);
  j["etaPow2"] = r.etaPow2;
  j["prefactorSign"] = r.prefactorSign;
  j["truncationOrder"] = toString(r.truncationOrder);
  return j;
}

ZhatResult zhatResultFromJson(const Json& j) {
  ZhatResult r;
  r.spinc = spinCFromJson(field(j, "spinc"));
  r.delta = rationalField(j, "delta");
  r.tail = qseriesFromJson(field(j, "tail"));
  const Json& eta = field(j, "etaPow2");
  if (!eta.is_number_unsigned()) throw FormatError("JSON: etaPow2 must be a non-negative integer");
  r.etaPow2 = eta.get<unsigned long>();
  const Json& sign = field(j, "prefactorSign");
  if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) {
    throw FormatError("JSON: prefactorSign must be 1 or -1");
  }
  r.prefactorSign = sign.get<int>();
  r.truncationOrder = rationalField(j, "truncationOrder");
  return r;
}

Json toJson(const BrieskornData& d) {
  Json j;
  j["triple"] = integers(d.triple);
  j["seifert"] = Json{{"b", d.seifert.b.get_str()}, {"a", integers(d.seifert.a)}};
  j["p"] = d.p.get_str();
  j["alphas"] = integers(d.alphas);
  Json legs = Json::array();
  for (const auto& leg : d.legFractions) legs.push_back(integers(leg));
  j["legFractions"] = legs;
  j["h"] = integers(d.h);
  j["vertexCount"] = d.vertexCount;
  j["trace"] = d.trace.get_str();
  j["xi"] = toString(d.xi);
  j["delta0"] = toString(d.delta0);
  return j;
}

BrieskornData brieskornDataFromJson(const Json& j) {
  BrieskornData d;
  d.triple = fixedIntegers<3>(j, "triple");
  const Json& s = field(j, "seifert");
  d.seifert.b = integerField(s, "b");
  d.seifert.a = fixedIntegers<3>(s, "a");
  d.p = integerField(j, "p");
  d.alphas = fixedIntegers<4>(j, "alphas");
  const Json& legs = field(j, "legFractions");
  if (!legs.is_array() || legs.size() != 3) throw FormatError("JSON: legFractions needs 3 legs");
  for (std::size_t i = 0; i < 3; ++i) d.legFractions[i] = integerList(legs[i], "legFractions");
  d.h = fixedIntegers<3>(j, "h");
  const Json& vc = field(j, "vertexCount");
  if (!vc.is_number_unsigned()) throw FormatError("JSON: vertexCount must be a count");
  d.vertexCount = vc.get<std::size_t>();
  d.trace = integerField(j, "trace");
  d.xi = rationalField(j, "xi");
  d.delta0 = rationalField(j, "delta0");
  return d;
}

Json toJson(const ComparisonRow& r) {
  Json j;
  j["triple"] = integers(r.triple);
  j["delta0"] = toString(r.delta0);
  j["d"] = r.dValue ? Json(r.dValue->get_str()) : Json(nullptr);
  j["seriesPrefix"] = toJson(r.seriesPrefix);
  j["series"] = prefixText(r.seriesPrefix, r.seriesPrefix.size());
  j["mod1Check"] = r.mod1Check;
  j["vertexCount"] = r.vertexCount;
  j["provenance"] = r.provenance;
  return j;
}

ComparisonRow comparisonRowFromJson(const Json& j) {
  ComparisonRow r;
  r.triple = fixedIntegers<3>(j, "triple");
  r.delta0 = rationalField(j, "delta0");
  const Json& d = field(j, "d");
  if (!d.is_null()) r.dValue = parseInteger(text(d, "d"));
  r.seriesPrefix = qseriesFromJson(field(j, "seriesPrefix"));
  const Json& m = field(j, "mod1Check");
  if (!m.is_boolean()) throw FormatError("JSON: mod1Check must be a boolean");
  r.mod1Check = m.get<bool>();
  const Json& vc = field(j, "vertexCount");
  if (!vc.is_number_unsigned()) throw FormatError("JSON: vertexCount must be a count");
  r.vertexCount = vc.get<std::size_t>();
  r.provenance = text(field(j, "provenance"), "provenance");
  return r;
}

Json toJson(const CounterexampleReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"name", e.name},
                           {"delta0", toString(e.delta0)},
                           {"prefix", toJson(e.prefix)},
                           {"series", prefixText(e.prefix, e.prefix.size())},
                           {"source", e.source}});
  }
  Json j;
  j["entries"] = entries;
  j["pairwiseIntegerDifferences"] = r.pairwiseIntegerDifferences;
  j["allDistinct"] = r.allDistinct;
  j["mod1Agrees"] = r.mod1Agrees;
  j["commonMod1"] = toString(r.commonMod1);
  j["citedFact"] = r.citedFact;
  return j;
}

}  // namespace zhat
