#include "zhat/brieskorn.hpp"

#include "zhat/errors.hpp"

#include <string>

namespace zhat {

namespace {

std::string tripleText(const Triple& t) {
  return "(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

std::int64_t toWeight(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidSeifertData("plumbing weight out of range: " + z.get_str());
  return z.get_si();
}

}  // namespace

void validateTriple(const Triple& t) {
  if (!(t[0] >= 2 && t[0] < t[1] && t[1] < t[2])) {
    throw InvalidTriple("triple " + tripleText(t) + " must satisfy 2 <= b1 < b2 < b3");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (gcdOf(t[i], t[j]) != 1) {
        throw InvalidTriple("triple " + tripleText(t) + " is not pairwise coprime: gcd(" +
                            t[i].get_str() + "," + t[j].get_str() + ") != 1");
      }
    }
  }
}

bool isExcludedTriple(const Triple& t) { return t[0] == 2 && t[1] == 3 && t[2] == 5; }

SeifertData solveSeifertData(const Triple& t) {
  validateTriple(t);
  const Integer p = t[0] * t[1] * t[2];
  SeifertData s;
  Integer sum = 0;
  for (int i = 0; i < 3; ++i) {
    const Integer c = p / t[i];
    // a_i = -c^-1 mod b_i
    Integer inv;
    mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), t[i].get_mpz_t());
    Integer ai = -inv;
    mpz_fdiv_r(ai.get_mpz_t(), ai.get_mpz_t(), t[i].get_mpz_t());
    s.a[i] = ai;
    sum += c * ai;
  }
  s.b = (-1 - sum) / p;
  return s;
}

void verifySeifertData(const Triple& t, const SeifertData& s) {
  validateTriple(t);
  if (s.b >= 0) throw InvalidSeifertData("Seifert b must be negative, got " + s.b.get_str());
  const Integer p = t[0] * t[1] * t[2];
  Integer lhs = p * s.b;
  for (int i = 0; i < 3; ++i) {
    if (s.a[i] <= 0) throw InvalidSeifertData("Seifert a_i must be positive");
    if (gcdOf(s.a[i], t[i]) != 1) {
      throw InvalidSeifertData("a_" + std::to_string(i + 1) + " = " + s.a[i].get_str() +
                               " is not coprime to " + t[i].get_str());
    }
    lhs += (p / t[i]) * s.a[i];
  }
  if (lhs != -1) {
    throw InvalidSeifertData("Seifert equation fails: p*b + sum (p/b_i) a_i = " + lhs.get_str() +
                             ", expected -1");
  }
}

std::vector<Integer> legContinuedFraction(const Integer& num, const Integer& den) {
  if (num <= 0 || den <= 0 || gcdOf(num, den) != 1) {
    throw InvalidFraction("continued fraction needs coprime positive " + num.get_str() + "/" +
                          den.get_str());
  }
  std::vector<Integer> ks;
  Integer n = num, d = den;
  while (d > 0) {
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    ks.push_back(k);
    Integer next = k * d - n;
    n = d;
    d = next;
  }
  return ks;
}

std::vector<Integer> hjContinuedFraction(const Integer& num, const Integer& den) {
  if (!(den > 0 && den < num) || gcdOf(num, den) != 1) {
    throw InvalidFraction("expected coprime 0 < den < num, got " + num.get_str() + "/" +
                          den.get_str());
  }
  return legContinuedFraction(num, den);
}

Rational evaluateContinuedFraction(const std::vector<Integer>& ks) {
  if (ks.empty()) throw InvalidFraction("empty continued fraction");
  Rational value = ks.back();
  for (std::size_t i = ks.size() - 1; i-- > 0;) {
    if (value == 0) throw InvalidFraction("continued fraction hits a zero denominator");
    value = Rational(ks[i]) - 1 / value;
  }
  return value;
}

std::array<Integer, 4> alphas(const Triple& t) {
  const Integer p = t[0] * t[1] * t[2];
  const Integer b12 = t[0] * t[1], b13 = t[0] * t[2], b23 = t[1] * t[2];
  return {Integer(p - b12 - b13 - b23), Integer(p + b12 - b13 - b23),
          Integer(p - b12 + b13 - b23), Integer(p + b12 + b13 - b23)};
}

BrieskornPlumbing buildPlumbing(const BrieskornData& d) {
  std::vector<std::int64_t> weights{toWeight(d.seifert.b)};
  std::vector<PlumbingGraph::Edge> edges;
  BrieskornPlumbing out;
  for (int leg = 0; leg < 3; ++leg) {
    if (d.legFractions[leg].empty()) throw InvalidSeifertData("leg of length zero");
    std::size_t prev = 0;
    for (const Integer& k : d.legFractions[leg]) {
      weights.push_back(-toWeight(k));
      edges.emplace_back(prev, weights.size() - 1);
      prev = weights.size() - 1;
    }
    out.terminals[leg] = prev;
  }
  out.graph = PlumbingGraph(std::move(weights), std::move(edges));
  return out;
}

XiDelta0 computeXiDelta0(const BrieskornData& d, const BrieskornPlumbing& g) {
  if (isExcludedTriple(d.triple)) {
    throw ExcludedTriple("Sigma(2,3,5) is excluded: the closed form misses an extra term there");
  }
  const Integer& b1 = d.triple[0];
  const Integer& b2 = d.triple[1];
  const Integer& b3 = d.triple[2];
  XiDelta0 out;
  for (int leg = 0; leg < 3; ++leg) {
    const VertexDeletion del = deleteVertex(g.graph, g.terminals[leg]);
    out.h[leg] = absOf(determinant(linkingMatrix(del.graph)).get_num());
  }
  const Integer s = g.graph.vertexCount();
  const Rational trace = linkingMatrix(g.graph).trace();
  out.xi = (Rational(out.h[0] + out.h[1] + out.h[2]) - Rational(3 * s) - trace -
            makeRational(b2 * b3, b1) - makeRational(b1 * b3, b2) - makeRational(b1 * b2, b3)) /
           4;
  const Integer a1 = alphas(d.triple)[0];
  out.delta0 = out.xi + makeRational(a1 * a1, 4 * d.p);
  return out;
}

BrieskornData analyzeBrieskorn(const Triple& t, const std::optional<SeifertData>& seifert) {
  validateTriple(t);
  if (isExcludedTriple(t)) {
    throw ExcludedTriple("Sigma(2,3,5) is excluded: the closed form misses an extra term there");
  }
  BrieskornData d;
  d.triple = t;
  if (seifert) {
    verifySeifertData(t, *seifert);
    d.seifert = *seifert;
  } else {
    d.seifert = solveSeifertData(t);
  }
  d.p = t[0] * t[1] * t[2];
  d.alphas = alphas(t);
  for (int i = 0; i < 3; ++i) d.legFractions[i] = legContinuedFraction(t[i], d.seifert.a[i]);
  const BrieskornPlumbing g = buildPlumbing(d);
  d.vertexCount = g.graph.vertexCount();
  d.trace = linkingMatrix(g.graph).trace().get_num();
  const XiDelta0 x = computeXiDelta0(d, g);
  d.h = x.h;
  d.xi = x.xi;
  d.delta0 = x.delta0;
  return d;
}

QSeries brieskornTail(const Triple& t, const Rational& order) {
  validateTriple(t);
  const Integer p = t[0] * t[1] * t[2];
  const auto al = alphas(t);
  const Rational lead = makeRational(al[0] * al[0], 4 * p);
  const Rational top = order + lead;
  QSeries sum(top, 4 * p);
  const int signs[4] = {1, -1, -1, 1};
  for (int i = 0; i < 4; ++i) sum = add(sum, scale(falseTheta(p, al[i], top), Rational(signs[i])));
  QSeries tail = shiftExponent(sum, -lead);
  tail.setExponentDenominatorHint(1);
  return tail;
}

ZhatResult zhat0Brieskorn(const Triple& t, const Rational& order,
                          const std::optional<SeifertData>& seifert) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const BrieskornData d = analyzeBrieskorn(t, seifert);
  const BrieskornPlumbing g = buildPlumbing(d);
  ZhatResult out;
  const std::vector<int> deg = degreeVector(g.graph);
  out.spinc.vector.assign(deg.begin(), deg.end());
  out.spinc.classIndex = 0;
  out.delta = d.delta0;
  out.tail = brieskornTail(t, order);
  out.etaPow2 = leadingExponentAndNormalize(out.tail).etaPow2;
  out.prefactorSign = 1;
  out.truncationOrder = order;
  return out;
}

}  // namespace zhat
