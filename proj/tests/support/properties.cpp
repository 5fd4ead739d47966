#include "properties.hpp"

#include "zhat/brieskorn.hpp"
#include "zhat/errors.hpp"
#include "zhat/lattice.hpp"
#include "zhat/zhat_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace zhat::props {

namespace {

using Rng = std::mt19937;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::string tripleText(const Triple& t) {
  return "(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

void fail(PropertyResult& r, const std::string& what) {
  if (r.failures++ == 0) r.firstFailure = what;
}

bool pairwiseCoprime(long a, long b, long c) {
  return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

Triple randomTriple(Rng& rng, long maxB3) {
  for (;;) {
    long b[3] = {uniform(rng, 2, maxB3), uniform(rng, 2, maxB3), uniform(rng, 2, maxB3)};
    std::sort(b, b + 3);
    if (b[0] == b[1] || b[1] == b[2] || !pairwiseCoprime(b[0], b[1], b[2])) continue;
    if (b[0] == 2 && b[1] == 3 && b[2] == 5) continue;
    return {b[0], b[1], b[2]};
  }
}

// Tree on s vertices, each vertex attached to a random earlier one, with weights drawn until
// the linking matrix is negative definite.
PlumbingGraph randomNegativeDefiniteTree(Rng& rng, std::size_t maxVertices) {
  for (;;) {
    const std::size_t s = static_cast<std::size_t>(uniform(rng, 1, long(maxVertices)));
    std::vector<PlumbingGraph::Edge> edges;
    std::vector<int> deg(s, 0);
    for (std::size_t v = 1; v < s; ++v) {
      const std::size_t u = static_cast<std::size_t>(uniform(rng, 0, long(v) - 1));
      edges.emplace_back(u, v);
      ++deg[u];
      ++deg[v];
    }
    std::vector<std::int64_t> w(s);
    for (std::size_t v = 0; v < s; ++v) w[v] = -uniform(rng, std::max(1, deg[v] - 1), deg[v] + 3);
    PlumbingGraph g(w, edges);
    if (isNegativeDefinite(linkingMatrix(g))) return g;
  }
}

ExactMatrix randomNegativeDefinite(Rng& rng, std::size_t n) {
  for (;;) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = -uniform(rng, 1, 7);
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i) = uniform(rng, -3, 3);
    }
    if (isNegativeDefinite(m)) return m;
  }
}

bool sameClass(const ExactMatrix& mInverse, const IntVector& a, const IntVector& b) {
  RationalVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = Rational(a[i] - b[i]) / 2;
  for (const Rational& x : mInverse.apply(std::span<const Rational>(diff))) {
    if (!isInteger(x)) return false;
  }
  return true;
}

}  // namespace

PropertyResult seifertEquation(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"Seifert equation exactness", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Triple t = randomTriple(rng, 400);
    ++r.cases;
    const SeifertData s = solveSeifertData(t);
    const Integer p = t[0] * t[1] * t[2];
    Integer lhs = p * s.b;
    for (int k = 0; k < 3; ++k) lhs += (p / t[k]) * s.a[k];
    bool ok = lhs == -1 && s.b < 0;
    for (int k = 0; k < 3; ++k) ok = ok && s.a[k] > 0 && s.a[k] < t[k];
    try {
      verifySeifertData(t, s);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) fail(r, tripleText(t) + ": p*b + sum = " + lhs.get_str());
  }
  return r;
}

PropertyResult continuedFractionRoundTrip(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"continued-fraction round trip, all k >= 2", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    const long num = uniform(rng, 2, 5000);
    const long den = uniform(rng, 1, num - 1);
    if (std::gcd(num, den) != 1) continue;
    ++r.cases;
    const std::vector<Integer> ks = hjContinuedFraction(num, den);
    const bool ok = evaluateContinuedFraction(ks) == makeRational(num, den) &&
                    std::all_of(ks.begin(), ks.end(), [](const Integer& k) { return k >= 2; });
    if (!ok) fail(r, std::to_string(num) + "/" + std::to_string(den));
  }
  return r;
}

PropertyResult alphaLemma(long maxP) {
  PropertyResult r{"alpha lemma over every coprime triple with p <= " + std::to_string(maxP), 0, 0,
                   {}};
  for (long b1 = 2; b1 * (b1 + 1) * (b1 + 2) <= maxP; ++b1) {
    for (long b2 = b1 + 1; b1 * b2 * (b2 + 1) <= maxP; ++b2) {
      for (long b3 = b2 + 1; b1 * b2 * b3 <= maxP; ++b3) {
        if (!pairwiseCoprime(b1, b2, b3)) continue;
        ++r.cases;
        const Triple t{b1, b2, b3};
        const Integer p = b1 * b2 * b3;
        const auto al = alphas(t);
        const bool excluded = isExcludedTriple(t);
        bool ok = true;
        for (const Integer& a : al) {
          ok = ok && a >= al[0];
          const Integer gap = a * a - al[0] * al[0];
          ok = ok && mpz_divisible_p(gap.get_mpz_t(), Integer(4 * p).get_mpz_t());
          if (!excluded) ok = ok && a > 0 && a < 2 * p;
        }
        if (!ok) fail(r, tripleText(t));
      }
    }
  }
  return r;
}

PropertyResult delta0HalfInteger(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"Delta0 = 1/2 mod 1", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Triple t = randomTriple(rng, 40);
    ++r.cases;
    const BrieskornData d = analyzeBrieskorn(t);
    if (!isInteger(d.delta0 - Rational(1, 2))) fail(r, tripleText(t) + ": " + toString(d.delta0));
  }
  return r;
}

PropertyResult brieskornTailShape(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"closed-form tail shape", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Triple t = randomTriple(rng, 200);
    ++r.cases;
    const QSeries tail = brieskornTail(t, 400);
    bool ok = tail.coefficient(0) == 1;
    for (const auto& [e, c] : tail.terms()) {
      ok = ok && isInteger(e) && e >= 0 && (c == 1 || c == -1);
    }
    if (!ok) fail(r, tripleText(t) + ": " + toText(tail));
  }
  return r;
}

PropertyResult engineTailShape(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"engine tail shape on random trees", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    const PlumbingGraph g = randomNegativeDefiniteTree(rng, 6);
    const auto reps = spinCRepresentatives(linkingMatrix(g), degreeVector(g));
    const SpinCRep& a = reps[static_cast<std::size_t>(uniform(rng, 0, long(reps.size()) - 1))];
    ZhatResult z;
    try {
      z = computeZhat(g, a, 6);
    } catch (const EmptySeries&) {
      continue;  // vanishing class, nothing to check
    }
    ++r.cases;
    bool ok = z.tail.coefficient(0) != 0;
    const Integer scale = Integer(1) << z.etaPow2;
    for (const auto& [e, c] : z.tail.terms()) {
      ok = ok && isInteger(e) && e >= 0 && isInteger(Rational(c * scale));
    }
    if (!ok) fail(r, formatPlumbing(g) + " class " + a.classIndex.get_str());
  }
  return r;
}

PropertyResult cosetCount(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"Spin^c count = |det M|", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const PlumbingGraph g = randomNegativeDefiniteTree(rng, 5);
    ++r.cases;
    const ExactMatrix m = linkingMatrix(g);
    const std::vector<int> delta = degreeVector(g);
    const auto reps = spinCRepresentatives(m, delta);
    const Integer det = absOf(determinant(m).get_num());
    bool ok = Integer(reps.size()) == det;
    const SmithForm f = smithNormalForm(m);
    Integer prod = 1;
    for (std::size_t k = 0; k < m.size(); ++k) prod *= f.d(k, k).get_num();
    ok = ok && prod == det;
    const ExactMatrix mi = inverse(m);
    // the quadratic pairwise test is limited to small groups
    const bool pairwise = reps.size() <= 64;
    for (std::size_t x = 0; x < reps.size() && ok; ++x) {
      ok = reduceSpinC(m, delta, reps[x].vector) == reps[x];
      for (std::size_t y = x + 1; pairwise && y < reps.size() && ok; ++y) {
        ok = !sameClass(mi, reps[x].vector, reps[y].vector);
      }
    }
    if (!ok) fail(r, formatPlumbing(g));
  }
  return r;
}

PropertyResult enumerationVersusBoxScan(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"coset enumeration = box scan (1x1, 2x2)", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = (i % 2) + 1;
    const ExactMatrix m = randomNegativeDefinite(rng, n);
    IntVector rep(n);
    for (auto& x : rep) x = uniform(rng, -6, 6);
    const Rational bound = makeRational(uniform(rng, 0, 400), uniform(rng, 1, 3));
    ++r.cases;
    const ExactMatrix mi = inverse(m);

    // n ranges over the ellipsoid -4 (n - n0)^T M (n - n0) <= bound with n0 = -M^-1 rep / 2,
    // so |n_i - n0_i| <= sqrt(bound * (-M^-1)_ii / 4); scan a box with margin around it.
    long radius = 2;
    for (std::size_t a = 0; a < n; ++a) {
      double center = 0;
      for (std::size_t b = 0; b < n; ++b) center -= mi(a, b).get_d() * rep[b].get_d() / 2;
      const double half = std::sqrt(bound.get_d() * -mi(a, a).get_d() / 4);
      radius = std::max(radius, long(std::ceil(std::abs(center) + half)) + 2);
    }
    std::set<IntVector> scanned;
    std::vector<long> nv(n, -radius);
    for (;;) {
      IntVector ell(rep);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) ell[a] += 2 * m(a, b).get_num() * nv[b];
      }
      if (negatedInverseForm(mi, ell) <= bound) scanned.insert(ell);
      std::size_t k = 0;
      while (k < n && nv[k] == radius) nv[k++] = -radius;
      if (k == n) break;
      ++nv[k];
    }

    std::set<IntVector> enumerated;
    std::size_t visits = 0;
    enumerateCosetUnderBound(m, rep, bound, [&](const IntVector& ell, const Rational&) {
      ++visits;
      enumerated.insert(ell);
    });
    if (enumerated != scanned || visits != enumerated.size()) {
      std::ostringstream s;
      s << n << "x" << n << " rep " << rep[0].get_str() << " bound " << toString(bound)
        << ": enumerated " << visits << ", scanned " << scanned.size();
      fail(r, s.str());
    }
  }
  return r;
}

PropertyResult negativeDefiniteAlgebra(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"negative definite linking matrices", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const PlumbingGraph g = randomNegativeDefiniteTree(rng, 7);
    ++r.cases;
    const ExactMatrix m = linkingMatrix(g);
    const ExactMatrix mi = inverse(m);
    const Signature sig = signatureAndPositiveCount(m);
    bool ok = inverse(mi) == m && determinant(m) * determinant(mi) == 1 &&
              sig.sigma == -int(m.size()) && sig.pi == 0 && isNegativeDefinite(mi);
    for (std::size_t k = 0; k < m.size(); ++k) ok = ok && m(k, k) < 0;
    if (!ok) fail(r, formatPlumbing(g));
  }
  return r;
}

PropertyResult seriesAddition(std::uint32_t seed, std::size_t cases) {
  PropertyResult r{"series addition laws", 0, 0, {}};
  Rng rng(seed);
  auto randomSeries = [&rng]() {
    const long order = uniform(rng, 5, 20);
    QSeries s(uniform(rng, 0, 3) == 0 ? std::nullopt : std::optional<Rational>(order));
    const long terms = uniform(rng, 0, 6);
    for (long k = 0; k < terms; ++k) {
      s.addTerm(makeRational(uniform(rng, -8, 40), uniform(rng, 1, 4)),
                makeRational(uniform(rng, -3, 3), uniform(rng, 1, 2)));
    }
    return s;
  };
  for (std::size_t i = 0; i < cases; ++i) {
    const QSeries a = randomSeries(), b = randomSeries(), c = randomSeries();
    ++r.cases;
    const bool ok = add(a, b).terms() == add(b, a).terms() &&
                    add(a, b).truncationOrder() == add(b, a).truncationOrder() &&
                    add(add(a, b), c).terms() == add(a, add(b, c)).terms() &&
                    add(a, negate(a)).empty();
    if (!ok) fail(r, toText(a) + " | " + toText(b) + " | " + toText(c));
  }
  return r;
}

}  // namespace zhat::props
