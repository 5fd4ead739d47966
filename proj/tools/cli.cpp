#include "cli.hpp"

#include "zhat/brieskorn.hpp"
#include "zhat/compare.hpp"
#include "zhat/errors.hpp"
#include "zhat/serialization.hpp"
#include "zhat/zhat_engine.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zhat::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Globals {
  std::string order = "200";
  std::string format = "text";
  std::string seifert;
};

struct Context {
  Rational order;
  Format format = Format::Text;
  std::optional<SeifertData> seifert;
  std::string commandLine;
  std::ostream& out;
};

/// Thrown for bad command-line values; maps to exit code 2 like domain errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

Rational parseOrder(const std::string& s) {
  const Rational r = parseRational(s);
  if (!isInteger(r) || r < 0) throw UsageError("--order must be a non-negative integer");
  return r;
}

Format parseFormat(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("--format must be text, json or csv");
}

std::optional<SeifertData> parseSeifert(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<Integer> values;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) values.push_back(parseInteger(tok));
  if (values.size() != 4) throw UsageError("--seifert expects b,a1,a2,a3");
  return SeifertData{values[0], {values[1], values[2], values[3]}};
}

Triple parseTriple(const std::vector<std::string>& v) {
  if (v.size() != 3) throw UsageError("expected three integers b1 b2 b3");
  return {parseInteger(v[0]), parseInteger(v[1]), parseInteger(v[2])};
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string tripleName(const Triple& t) {
  return "Sigma(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

std::string joined(const auto& values, const char* sep) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += sep;
    s += v.get_str();
  }
  return s;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emitEnvelope(const Context& ctx, const std::string& command, Json inputs, Json results) {
  Json env;
  env["command"] = command;
  env["commandLine"] = ctx.commandLine;
  env["inputs"] = std::move(inputs);
  env["toolVersion"] = kToolVersion;
  env["truncationOrder"] = toString(ctx.order);
  env["results"] = std::move(results);
  ctx.out << env.dump(2) << '\n';
}

std::string zhatText(const ZhatResult& r) {
  return toText(shiftExponent(r.tail, r.delta));
}

int cmdBrieskorn(const Context& ctx, const Triple& t) {
  const BrieskornData d = analyzeBrieskorn(t, ctx.seifert);
  const ZhatResult z = zhat0Brieskorn(t, ctx.order, ctx.seifert);
  switch (ctx.format) {
    case Format::Json:
      emitEnvelope(ctx, "brieskorn", Json{{"triple", joined(t, " ")}},
                   Json{{"brieskorn", toJson(d)}, {"zhat0", toJson(z)}});
      break;
    case Format::Csv:
      ctx.out << "triple,seifert_b,a1,a2,a3,p,alpha1,alpha2,alpha3,alpha4,h1,h2,h3,vertices,"
                 "trace,xi,delta0,tail\n";
      ctx.out << csvField("(" + joined(t, ",") + ")") << ',' << d.seifert.b.get_str() << ','
              << joined(d.seifert.a, ",") << ',' << d.p.get_str() << ','
              << joined(d.alphas, ",") << ',' << joined(d.h, ",") << ',' << d.vertexCount << ','
              << d.trace.get_str() << ',' << toString(d.xi) << ',' << toString(d.delta0) << ','
              << csvField(toText(z.tail)) << '\n';
      break;
    case Format::Text: {
      ctx.out << tripleName(t) << '\n';
      ctx.out << "seifert = (b=" << d.seifert.b.get_str() << "; a=" << joined(d.seifert.a, ",")
              << ")\n";
      ctx.out << "p = " << d.p.get_str() << '\n';
      ctx.out << "alphas = " << joined(d.alphas, ", ") << '\n';
      for (int i = 0; i < 3; ++i) {
        ctx.out << "leg" << i + 1 << " = " << t[i].get_str() << "/" << d.seifert.a[i].get_str()
                << " = [" << joined(d.legFractions[i], ",") << "]\n";
      }
      ctx.out << "vertices = " << d.vertexCount << '\n';
      ctx.out << "trace = " << d.trace.get_str() << '\n';
      ctx.out << "h = " << joined(d.h, ", ") << '\n';
      ctx.out << "xi = " << toString(d.xi) << '\n';
      ctx.out << "delta0 = " << toString(d.delta0) << '\n';
      ctx.out << "order = " << toString(ctx.order) << '\n';
      ctx.out << "zhat0 = q^" << exponentText(z.delta) << " * (" << toText(z.tail) << ")\n";
      break;
    }
  }
  return 0;
}

struct GraphSelection {
  std::string file;
  std::string classIndex = "0";
  bool all = false;
};

std::vector<SpinCRep> selectClasses(const PlumbingGraph& g, const GraphSelection& sel) {
  std::vector<SpinCRep> reps = spinCRepresentatives(linkingMatrix(g), degreeVector(g));
  if (sel.all) return reps;
  const Integer k = parseInteger(sel.classIndex);
  if (k < 0 || k >= static_cast<unsigned long>(reps.size())) {
    throw InvalidSpinC("class index " + k.get_str() + " out of range 0.." +
                       std::to_string(reps.size() - 1));
  }
  return {reps[k.get_ui()]};
}

std::string vectorText(const IntVector& v) { return "(" + joined(v, ", ") + ")"; }

/// With --all a class whose series is empty is reported instead of aborting the run.
struct ClassOutcome {
  SpinCRep spinc;
  std::optional<ZhatResult> result;
  std::string emptyReason;
};

std::vector<ClassOutcome> runClasses(const Context& ctx, const PlumbingGraph& g,
                                     const GraphSelection& sel, const ZhatOptions& options) {
  std::vector<ClassOutcome> outcomes;
  for (const SpinCRep& a : selectClasses(g, sel)) {
    ClassOutcome o{a, std::nullopt, {}};
    try {
      o.result = computeZhat(g, a, ctx.order, options);
    } catch (const EmptySeries& e) {
      if (!sel.all) throw;
      o.emptyReason = e.what();
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

int cmdGraph(const Context& ctx, const GraphSelection& sel, const ZhatOptions& options) {
  const PlumbingGraph g = parsePlumbing(readFile(sel.file));
  const std::vector<ClassOutcome> outcomes = runClasses(ctx, g, sel, options);
  switch (ctx.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& o : outcomes) {
        arr.push_back(o.result ? toJson(*o.result)
                               : Json{{"spinc", toJson(o.spinc)}, {"empty", o.emptyReason}});
      }
      emitEnvelope(ctx, "graph", Json{{"file", sel.file}, {"vertices", g.vertexCount()}}, arr);
      break;
    }
    case Format::Csv:
      ctx.out << "class,vector,delta,eta,sign,tail\n";
      for (const auto& o : outcomes) {
        ctx.out << o.spinc.classIndex.get_str() << ',' << csvField(vectorText(o.spinc.vector));
        if (o.result) {
          const ZhatResult& r = *o.result;
          ctx.out << ',' << toString(r.delta) << ',' << r.etaPow2 << ',' << r.prefactorSign << ','
                  << csvField(toText(r.tail)) << '\n';
        } else {
          ctx.out << ",,,,0\n";
        }
      }
      break;
    case Format::Text:
      for (const auto& o : outcomes) {
        ctx.out << "class " << o.spinc.classIndex.get_str() << "  a = "
                << vectorText(o.spinc.vector) << '\n';
        if (!o.result) {
          ctx.out << "  zhat = 0  (" << o.emptyReason << ")\n";
          continue;
        }
        const ZhatResult& r = *o.result;
        ctx.out << "  delta = " << toString(r.delta) << '\n';
        ctx.out << "  eta = " << r.etaPow2 << '\n';
        ctx.out << "  sign = " << (r.prefactorSign > 0 ? "+1" : "-1") << '\n';
        ctx.out << "  tail = " << toText(r.tail) << '\n';
        ctx.out << "  zhat = " << zhatText(r) << '\n';
      }
      break;
  }
  return 0;
}

int cmdDelta(const Context& ctx, const GraphSelection& sel, bool reverse,
             const ZhatOptions& options) {
  const PlumbingGraph g = parsePlumbing(readFile(sel.file));
  Context local = ctx;
  local.order = 0;
  const std::vector<ClassOutcome> outcomes = runClasses(local, g, sel, options);
  auto value = [reverse](const ClassOutcome& o) {
    return reverse ? deltaOrientationReversal(o.result->delta) : o.result->delta;
  };
  switch (ctx.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& o : outcomes) {
        Json row{{"spinc", toJson(o.spinc)}};
        if (o.result) {
          row["delta"] = toString(value(o));
        } else {
          row["empty"] = o.emptyReason;
        }
        arr.push_back(row);
      }
      emitEnvelope(ctx, "delta",
                   Json{{"file", sel.file}, {"orientation", reverse ? "reversed" : "given"}}, arr);
      break;
    }
    case Format::Csv:
      ctx.out << "class,vector,delta\n";
      for (const auto& o : outcomes) {
        ctx.out << o.spinc.classIndex.get_str() << ',' << csvField(vectorText(o.spinc.vector))
                << ',' << (o.result ? toString(value(o)) : std::string()) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& o : outcomes) {
        ctx.out << "class " << o.spinc.classIndex.get_str() << "  delta" << (reverse ? "(-Y)" : "")
                << " = " << (o.result ? toString(value(o)) : "undefined (zhat = 0)") << '\n';
      }
      break;
  }
  return 0;
}

struct TableArgs {
  std::string id;
  std::string file;
  long pMin = 3;
  long pMax = 6;
  std::size_t terms = 6;
};

int cmdTable(const Context& ctx, const TableArgs& args) {
  if (args.id == "counterexample") {
    const CounterexampleReport r = counterexampleReport(ctx.order);
    if (ctx.format == Format::Json) {
      emitEnvelope(ctx, "table", Json{{"id", args.id}}, toJson(r));
    } else {
      ctx.out << formatReport(r);
    }
    return 0;
  }
  const auto id = parseTableId(args.id);
  if (!id) {
    throw UsageError("unknown table id '" + args.id +
                     "' (expected d-family, brieskorn-batch, hom-cob-family, batch, "
                     "counterexample)");
  }
  TableParams params;
  params.pMin = args.pMin;
  params.pMax = args.pMax;
  params.defaultPrefixTerms = args.terms;
  if (*id == TableId::Batch) {
    if (args.file.empty()) throw UsageError("table batch needs a triple file");
    params.triples = parseTripleFile(readFile(args.file));
  }
  const std::vector<ComparisonRow> rows = generateTable(*id, params);
  switch (ctx.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(toJson(r));
      Json inputs{{"id", args.id}};
      if (*id == TableId::DFamily) {
        inputs["pmin"] = args.pMin;
        inputs["pmax"] = args.pMax;
      }
      if (!args.file.empty()) inputs["file"] = args.file;
      emitEnvelope(ctx, "table", inputs, arr);
      break;
    }
    case Format::Csv: ctx.out << rowsToCsv(rows); break;
    case Format::Text: ctx.out << rowsToText(rows); break;
  }
  return 0;
}

struct CheckOutcome {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CheckOutcome> runChecks(const Triple& t, const std::optional<SeifertData>& seifert) {
  std::vector<CheckOutcome> checks;
  const BrieskornData d = analyzeBrieskorn(t, seifert);

  Integer lhs = d.p * d.seifert.b;
  for (int i = 0; i < 3; ++i) lhs += (d.p / t[i]) * d.seifert.a[i];
  checks.push_back({"seifert-equation", lhs == -1, "p*b + sum (p/b_i) a_i = " + lhs.get_str()});

  bool cfOk = true;
  std::string cfDetail;
  for (int i = 0; i < 3; ++i) {
    const auto& ks = d.legFractions[i];
    const bool roundTrip = evaluateContinuedFraction(ks) == makeRational(t[i], d.seifert.a[i]);
    const bool atLeastTwo = std::all_of(ks.begin(), ks.end(), [](const Integer& k) { return k >= 2; });
    cfOk = cfOk && roundTrip && atLeastTwo;
    cfDetail += (i ? " " : "") + std::string("[") + joined(ks, ",") + "]";
  }
  checks.push_back({"continued-fractions", cfOk, cfDetail});

  const Integer twoP = 2 * d.p;
  bool alphaOk = true;
  for (const Integer& a : d.alphas) {
    const Integer gap = a * a - d.alphas[0] * d.alphas[0];
    alphaOk = alphaOk && a >= d.alphas[0] && a > 0 && a < twoP &&
              mpz_divisible_p(gap.get_mpz_t(), Integer(4 * d.p).get_mpz_t());
  }
  checks.push_back({"alpha-lemma", alphaOk, "alphas = " + joined(d.alphas, ", ")});

  checks.push_back({"delta0-mod-1", homologySphereDeltaCheck(d.delta0),
                    "delta0 = " + toString(d.delta0)});

  const Rational order = 50;
  const ZhatResult closed = zhat0Brieskorn(t, order, seifert);
  const BrieskornPlumbing g = buildPlumbing(d);
  const auto reps = spinCRepresentatives(linkingMatrix(g.graph), degreeVector(g.graph));
  const ZhatResult engine = computeZhat(g.graph, reps.front(), order);
  const bool same = reps.size() == 1 && engine.delta == closed.delta &&
                    engine.etaPow2 == 0 && engine.tail.terms() == closed.tail.terms();
  checks.push_back({"engine-cross-oracle", same,
                    "engine delta = " + toString(engine.delta) + ", closed form delta = " +
                        toString(closed.delta) + ", order 50"});
  return checks;
}

int cmdCheck(const Context& ctx, const Triple& t) {
  const std::vector<CheckOutcome> checks = runChecks(t, ctx.seifert);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  switch (ctx.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      emitEnvelope(ctx, "check", Json{{"triple", joined(t, " ")}},
                   Json{{"checks", arr}, {"allPass", all}});
      break;
    }
    case Format::Csv:
      ctx.out << "check,pass,detail\n";
      for (const auto& c : checks) {
        ctx.out << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << csvField(c.detail) << '\n';
      }
      break;
    case Format::Text:
      ctx.out << tripleName(t) << '\n';
      for (const auto& c : checks) {
        ctx.out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
      }
      ctx.out << (all ? "all checks passed" : "some checks FAILED") << '\n';
      break;
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zhat q-series invariants and Delta exponents of plumbed 3-manifolds", "zhat"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--order", globals.order, "exponent steps kept above the leading term")
      ->capture_default_str();
  app.add_option("--format", globals.format, "text, json or csv")->capture_default_str();
  app.add_option("--seifert", globals.seifert, "Seifert data override b,a1,a2,a3");

  std::vector<std::string> tripleArgs;
  auto* brieskorn = app.add_subcommand("brieskorn", "closed-form pipeline for Sigma(b1,b2,b3)");
  brieskorn->add_option("triple", tripleArgs, "b1 b2 b3")->required()->expected(3);

  GraphSelection sel;
  std::string strategy = "pruned";
  bool weak = false;
  auto addEngineFlags = [&](CLI::App* sub) {
    sub->add_option("file", sel.file, "PLUMB v1 file")->required();
    sub->add_option("--class", sel.classIndex, "Spin^c class index")->capture_default_str();
    sub->add_flag("--all", sel.all, "every Spin^c class");
    sub->add_option("--strategy", strategy, "pruned or full")->capture_default_str();
    sub->add_flag("--experimental-weak", weak, "accept weakly negative definite plumbings");
  };
  auto* graph = app.add_subcommand("graph", "general engine on a plumbing file");
  addEngineFlags(graph);
  bool reverse = false;
  auto* delta = app.add_subcommand("delta", "Delta_a for a plumbing file");
  addEngineFlags(delta);
  delta->add_flag("--reverse", reverse, "report Delta_a(-Y) = -Delta_a(Y)");

  TableArgs table;
  auto* tableCmd = app.add_subcommand("table", "recompute a comparison table");
  tableCmd->add_option("id", table.id,
                       "d-family, brieskorn-batch, hom-cob-family, batch or counterexample")
      ->required();
  tableCmd->add_option("file", table.file, "triple file for 'batch'");
  tableCmd->add_option("--pmin", table.pMin, "first p for d-family")->capture_default_str();
  tableCmd->add_option("--pmax", table.pMax, "last p for d-family")->capture_default_str();
  tableCmd->add_option("--terms", table.terms, "series terms shown for batch rows")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "invariant suite for one triple");
  check->add_option("triple", tripleArgs, "b1 b2 b3")->required()->expected(3);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string commandLine = "zhat";
  for (const auto& a : args) commandLine += " " + a;

  try {
    Context ctx{parseOrder(globals.order), parseFormat(globals.format),
                parseSeifert(globals.seifert), commandLine, out};
    ZhatOptions options;
    if (strategy == "full") {
      options.strategy = EnumerationStrategy::FullCoset;
    } else if (strategy != "pruned") {
      throw UsageError("--strategy must be pruned or full");
    }
    options.allowWeaklyNegativeDefinite = weak;

    if (*brieskorn) return cmdBrieskorn(ctx, parseTriple(tripleArgs));
    if (*graph) return cmdGraph(ctx, sel, options);
    if (*delta) return cmdDelta(ctx, sel, reverse, options);
    if (*tableCmd) return cmdTable(ctx, table);
    if (*check) return cmdCheck(ctx, parseTriple(tripleArgs));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace zhat::cli
