#include "zhat/zhat_engine.hpp"

#include "zhat/errors.hpp"
#include "zhat/lattice.hpp"

#include <optional>
#include <stdexcept>

namespace zhat {

namespace {

struct SpinCFrame {
  ExactMatrix u;
  ExactMatrix uInverse;
  IntVector d;
};

SpinCFrame spinCFrame(const ExactMatrix& m) {
  if (!m.isIntegral() || !m.isSymmetric()) {
    throw std::invalid_argument("Spin^c classes need a symmetric integer matrix");
  }
  SmithForm snf = smithNormalForm(m);
  SpinCFrame f{snf.u, inverse(snf.u), {}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Integer di = snf.d(i, i).get_num();
    if (di == 0) throw SingularMatrix("linking matrix is singular");
    f.d.push_back(di);
  }
  return f;
}

SpinCRep repFromDigits(const SpinCFrame& f, const std::vector<int>& delta, const IntVector& y) {
  const std::size_t s = delta.size();
  SpinCRep rep;
  rep.vector.resize(s);
  const RationalVector shift = f.uInverse.apply(std::span<const Integer>(y));
  for (std::size_t i = 0; i < s; ++i) rep.vector[i] = delta[i] + 2 * shift[i].get_num();
  Integer index = 0;
  for (std::size_t i = 0; i < s; ++i) index = index * f.d[i] + y[i];
  rep.classIndex = index;
  return rep;
}

SpinCRep reduceWithFrame(const SpinCFrame& f, const std::vector<int>& delta, const IntVector& a) {
  const std::size_t s = delta.size();
  if (a.size() != s) throw InvalidSpinC("Spin^c vector has the wrong length");
  IntVector x(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Integer diff = a[i] - delta[i];
    if (!mpz_even_p(diff.get_mpz_t())) {
      throw InvalidSpinC("a - delta must be even at vertex " + std::to_string(i + 1));
    }
    x[i] = diff / 2;
  }
  const RationalVector ux = f.u.apply(std::span<const Integer>(x));
  IntVector y(s);
  for (std::size_t i = 0; i < s; ++i) {
    mpz_fdiv_r(y[i].get_mpz_t(), ux[i].get_num_mpz_t(), f.d[i].get_mpz_t());
  }
  return repFromDigits(f, delta, y);
}

}  // namespace

std::vector<SpinCRep> spinCRepresentatives(const ExactMatrix& m, const std::vector<int>& delta) {
  if (delta.size() != m.size()) throw std::invalid_argument("degree vector size mismatch");
  const SpinCFrame f = spinCFrame(m);
  const std::size_t s = m.size();
  Integer count = 1;
  for (const Integer& di : f.d) count *= di;
  std::vector<SpinCRep> reps;
  IntVector y(s, Integer(0));
  for (Integer index = 0; index < count; ++index) {
    reps.push_back(repFromDigits(f, delta, y));
    for (std::size_t i = s; i-- > 0;) {
      if (++y[i] < f.d[i]) break;
      y[i] = 0;
    }
  }
  return reps;
}

SpinCRep reduceSpinC(const ExactMatrix& m, const std::vector<int>& delta, const IntVector& a) {
  if (delta.size() != m.size()) throw std::invalid_argument("degree vector size mismatch");
  return reduceWithFrame(spinCFrame(m), delta, a);
}

SpinCRep conjugateSpinC(const SpinCRep& a, const ExactMatrix& m, const std::vector<int>& delta) {
  IntVector neg(a.vector.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -a.vector[i];
  return reduceSpinC(m, delta, neg);
}

Rational vertexFactorCoefficient(int deg, const Integer& k) {
  if (deg < 0) throw std::invalid_argument("negative vertex degree");
  if (deg <= 2) {
    // (z - 1/z)^n = sum_i C(n,i) (-1)^i z^(n-2i)
    const unsigned long n = static_cast<unsigned long>(2 - deg);
    const Integer twiceI = Integer(static_cast<long>(n)) - k;
    if (twiceI < 0 || mpz_odd_p(twiceI.get_mpz_t())) return 0;
    const Integer i = twiceI / 2;
    if (i > static_cast<long>(n)) return 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, i.get_ui());
    return mpz_odd_p(i.get_mpz_t()) ? Rational(-c) : Rational(c);
  }
  const long m = deg - 2;
  Rational out = 0;
  auto binom = [m](const Integer& j) {
    Integer c;
    mpz_bin_ui(c.get_mpz_t(), Integer(m - 1 + j).get_mpz_t(), j.get_ui());
    return c;
  };
  // |z| > 1: z^-m (1 - z^-2)^-m, support k = -m - 2j
  const Integer outside = -k - m;
  if (outside >= 0 && mpz_even_p(outside.get_mpz_t())) {
    out += makeRational(binom(outside / 2), 2);
  }
  // |z| < 1: (-1)^m z^m (1 - z^2)^-m, support k = m + 2j
  const Integer inside = k - m;
  if (inside >= 0 && mpz_even_p(inside.get_mpz_t())) {
    const Rational half = makeRational(binom(inside / 2), 2);
    out += (m % 2 == 0) ? half : Rational(-half);
  }
  return out;
}

Rational deltaOrientationReversal(const Rational& delta) { return -delta; }

namespace {

using PointVisitor = std::function<void(const Rational& q, const Rational& coeff)>;
using RationalRows = std::vector<RationalVector>;

class Engine {
 public:
  Engine(const PlumbingGraph& g, const SpinCRep& a, const ZhatOptions& options)
      : options_(options), m_(linkingMatrix(g)), deg_(degreeVector(g)), a_(a.vector) {
    const std::size_t s = m_.size();
    if (a_.size() != s) throw InvalidSpinC("Spin^c vector has the wrong length");
    for (std::size_t i = 0; i < s; ++i) {
      if (mpz_odd_p(Integer(a_[i] - deg_[i]).get_mpz_t())) {
        throw InvalidSpinC("a - delta must be even at vertex " + std::to_string(i + 1));
      }
    }
    for (std::size_t v = 0; v < s; ++v) (deg_[v] >= 3 ? inner_ : outer_).push_back(v);

    const DefinitenessClass cls = classifyDefiniteness(m_, inner_);
    const bool weakOk = options_.allowWeaklyNegativeDefinite &&
                        options_.strategy == EnumerationStrategy::SupportPruned &&
                        cls == DefinitenessClass::WeaklyNegativeDefinite;
    if (cls != DefinitenessClass::NegativeDefinite && !weakOk) {
      throw NotNegativeDefinite(std::string("linking matrix is ") + toString(cls));
    }

    const Signature sig = signatureAndPositiveCount(m_);
    sign_ = sig.pi % 2 == 0 ? 1 : -1;
    prefactor_ = (Rational(3 * sig.sigma) - m_.trace()) / 4;
    det_ = determinant(m_).get_num();
    mInverse_ = inverse(m_);
    form_ = -mInverse_;
    adjugate_ = mInverse_.scaled(Rational(det_));
    if (options_.strategy == EnumerationStrategy::SupportPruned) prepareBlocks();
    if (inner_.empty()) {
      Rational cap = 0;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) cap += 4 * abs(form_(i, j));
      }
      supportCap_ = cap;
    }
  }

  int sign() const { return sign_; }
  const Rational& prefactor() const { return prefactor_; }
  Integer hint() const { return 4 * absOf(det_); }

  /// With no degree >= 3 vertex every support point has |l_v| <= 2, so Q(l) stays below
  /// this; past it the class has no contributing point at all.
  const std::optional<Rational>& supportCap() const { return supportCap_; }

  /// Whether some coset point has every vertex factor nonzero. Fixing the outer coordinates
  /// inside their windows leaves M_O n = (l_O - a_O)/2 to solve over Z; any solution extends
  /// to a full-rank affine lattice of inner values, which always meets |l_v| >= deg - 2.
  /// nullopt when the window product is too large to scan.
  std::optional<bool> hasSupport() const {
    const std::size_t s = m_.size(), no = outer_.size();
    if (no == 0) return true;
    std::vector<std::vector<Integer>> windows;
    double combos = 1;
    for (std::size_t v : outer_) {
      windows.push_back(supportWindow(deg_[v]));
      combos *= double(windows.back().size());
    }
    if (combos > 65536) return std::nullopt;

    ExactMatrix rows(s);
    for (std::size_t r = 0; r < no; ++r) {
      for (std::size_t c = 0; c < s; ++c) rows(r, c) = m_(outer_[r], c);
    }
    const SmithForm f = smithNormalForm(rows);
    std::vector<std::size_t> pick(no, 0);
    for (;;) {
      RationalVector rhs(s, Rational(0));
      for (std::size_t r = 0; r < no; ++r) {
        rhs[r] = Rational(windows[r][pick[r]] - a_[outer_[r]]) / 2;
      }
      bool solvable = true;
      const RationalVector c = f.u.apply(std::span<const Rational>(rhs));
      for (std::size_t i = 0; i < s && solvable; ++i) {
        const Rational& d = f.d(i, i);
        solvable = d == 0 ? c[i] == 0 : isInteger(c[i] / d);
      }
      if (solvable) return true;
      std::size_t t = 0;
      while (t < no && ++pick[t] == windows[t].size()) pick[t++] = 0;
      if (t == no) return false;
    }
  }

  /// Calls visit(Q(l), c_l) for every coset point with c_l != 0 and Q(l) <= bound.
  void collect(const Rational& bound, const PointVisitor& visit) const {
    if (options_.strategy == EnumerationStrategy::FullCoset) {
      enumerateCosetUnderBound(m_, a_, bound, [&](const IntVector& ell, const Rational& q) {
        const Rational c = coefficient(ell);
        if (c != 0) visit(q, c);
      });
      return;
    }
    forEachOuter(bound, [&](const IntVector& outer, const Rational& schurValue) {
      searchInner(outer, schurValue, bound, visit);
    });
  }

 private:
  void prepareBlocks() {
    const std::size_t no = outer_.size(), ni = inner_.size();
    const ExactMatrix aii = form_.principalSubmatrix(inner_);
    if (ni > 0) {
      auto dec = decomposePositiveDefinite(aii);
      if (!dec) throw NotNegativeDefinite("form is not definite on the high-degree block");
      innerForm_ = std::move(*dec);
    }
    // K = -A_II^-1 A_IO gives the inner center; S = A_OO + A_OI K is the Schur complement.
    innerCenterMap_.assign(ni, RationalVector(no));
    if (ni > 0) {
      const ExactMatrix aiiInv = inverse(aii);
      for (std::size_t r = 0; r < ni; ++r) {
        for (std::size_t c = 0; c < no; ++c) {
          Rational acc = 0;
          for (std::size_t k = 0; k < ni; ++k) acc -= aiiInv(r, k) * form_(inner_[k], outer_[c]);
          innerCenterMap_[r][c] = acc;
        }
      }
    }
    schur_ = ExactMatrix(no);
    for (std::size_t r = 0; r < no; ++r) {
      for (std::size_t c = 0; c < no; ++c) {
        Rational acc = form_(outer_[r], outer_[c]);
        for (std::size_t k = 0; k < ni; ++k) {
          acc += form_(outer_[r], inner_[k]) * innerCenterMap_[k][c];
        }
        schur_(r, c) = acc;
      }
    }
    schurForm_ = decomposePositiveDefinite(schur_);
    for (std::size_t v : outer_) windows_.push_back(supportWindow(deg_[v]));
  }

  /// Values of l_v with a nonzero factor at a vertex of degree <= 2.
  static std::vector<Integer> supportWindow(int deg) {
    std::vector<Integer> w;
    for (long k = -2; k <= 2; ++k) {
      if (vertexFactorCoefficient(deg, Integer(-k)) != 0) w.emplace_back(k);
    }
    return w;
  }

  bool inWindow(std::size_t t, const Integer& y) const {
    for (const Integer& w : windows_[t]) {
      if (w == y) return true;
    }
    return false;
  }

  void forEachOuter(const Rational& bound,
                    const std::function<void(const IntVector&, const Rational&)>& visit) const {
    const std::size_t no = outer_.size();
    if (no == 0) {
      visit(IntVector{}, Rational(0));
      return;
    }
    IntVector x(no);
    if (schurForm_) {
      // Fincke-Pohst over the Schur form, but only along window values.
      const QuadraticDecomposition& f = *schurForm_;
      std::function<void(std::size_t, const Rational&)> prune = [&](std::size_t t,
                                                                    const Rational& used) {
        if (t == no) {
          visit(x, used);
          return;
        }
        Rational shift = 0;
        for (std::size_t u = 0; u < t; ++u) {
          if (f.mu[t][u] != 0 && x[u] != 0) shift += f.mu[t][u] * x[u];
        }
        for (const Integer& w : windows_[t]) {
          const Rational diff = Rational(w) + shift;
          const Rational next = used + f.d[t] * diff * diff;
          if (next > bound) continue;
          x[t] = w;
          prune(t + 1, next);
        }
      };
      prune(0, Rational(0));
      return;
    }
    // Indefinite Schur complement (weak case): walk the finite window product.
    std::function<void(std::size_t)> walk = [&](std::size_t t) {
      if (t == no) {
        Rational value = 0;
        for (std::size_t r = 0; r < no; ++r) {
          for (std::size_t c = 0; c < no; ++c) value += schur_(r, c) * x[r] * x[c];
        }
        if (value <= bound) visit(x, value);
        return;
      }
      for (const Integer& w : windows_[t]) {
        x[t] = w;
        walk(t + 1);
      }
    };
    walk(0);
  }

  void searchInner(const IntVector& outer, const Rational& schurValue, const Rational& bound,
                   const PointVisitor& visit) const {
    const std::size_t ni = inner_.size();
    IntVector ell(m_.size());
    for (std::size_t k = 0; k < outer_.size(); ++k) ell[outer_[k]] = outer[k];
    auto leaf = [&](const IntVector& in, const Rational& innerValue) {
      for (std::size_t k = 0; k < ni; ++k) ell[inner_[k]] = in[k];
      if (!inCoset(ell)) return;
      const Rational c = coefficient(ell);
      if (c != 0) visit(schurValue + innerValue, c);
    };
    if (ni == 0) {
      leaf(IntVector{}, Rational(0));
      return;
    }
    RationalVector center(ni);
    for (std::size_t r = 0; r < ni; ++r) {
      for (std::size_t c = 0; c < outer.size(); ++c) {
        if (outer[c] != 0) center[r] += innerCenterMap_[r][c] * outer[c];
      }
    }
    enumerateEllipsoid(innerForm_, center, bound - schurValue, leaf,
                       [this](std::size_t t, const Integer& y) {
                         const long m = deg_[inner_[t]] - 2;
                         const Integer diff = y - m;
                         return mpz_even_p(diff.get_mpz_t()) && absOf(y) >= m;
                       });
  }

  /// M^-1 (l - a) in 2Z^s, tested as adj(M) (l - a) = 0 mod 2 det M.
  bool inCoset(const IntVector& ell) const {
    const std::size_t s = ell.size();
    const Integer modulus = 2 * det_;
    IntVector diff(s);
    for (std::size_t i = 0; i < s; ++i) diff[i] = ell[i] - a_[i];
    for (std::size_t i = 0; i < s; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < s; ++j) {
        if (diff[j] != 0) acc += adjugate_(i, j).get_num() * diff[j];
      }
      if (!mpz_divisible_p(acc.get_mpz_t(), modulus.get_mpz_t())) return false;
    }
    return true;
  }

  Rational coefficient(const IntVector& ell) const {
    Rational c = 1;
    for (std::size_t v = 0; v < ell.size() && c != 0; ++v) {
      c *= vertexFactorCoefficient(deg_[v], Integer(-ell[v]));
    }
    return c;
  }

  ZhatOptions options_;
  ExactMatrix m_;
  std::vector<int> deg_;
  IntVector a_;
  std::vector<std::size_t> outer_, inner_;
  int sign_ = 1;
  Rational prefactor_;
  Integer det_;
  ExactMatrix mInverse_, form_, adjugate_;
  QuadraticDecomposition innerForm_;
  RationalRows innerCenterMap_;
  ExactMatrix schur_;
  std::optional<QuadraticDecomposition> schurForm_;
  std::vector<std::vector<Integer>> windows_;
  std::optional<Rational> supportCap_;
};

}  // namespace

ZhatResult computeZhat(const PlumbingGraph& g, const SpinCRep& a, const Rational& order,
                       const ZhatOptions& options) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const Engine engine(g, a, options);
  const Rational& pref = engine.prefactor();

  if (engine.hasSupport() == false) {
    throw EmptySeries("Zhat vanishes identically for this Spin^c class");
  }
  std::optional<Rational> qMin;
  const Rational cap = Rational(Integer(1) << 64);
  for (Rational bound = 1; !qMin; bound *= 2) {
    if (bound > cap) throw EmptySeries("no lattice point with a nonzero coefficient found");
    engine.collect(bound, [&](const Rational& q, const Rational&) {
      if (!qMin || q < *qMin) qMin = q;
    });
    if (!qMin && engine.supportCap() && bound > *engine.supportCap()) {
      throw EmptySeries("Zhat vanishes identically for this Spin^c class");
    }
  }

  auto aggregate = [&](const Rational& top) {
    QSeries s(top, engine.hint());
    engine.collect(4 * (top - pref), [&](const Rational& q, const Rational& c) {
      s.addTerm(pref + q / 4, c * engine.sign());
    });
    return s;
  };
  const Rational rawMin = pref + *qMin / 4;
  QSeries series = aggregate(rawMin + order);
  if (series.empty()) {
    throw EmptySeries("all coefficients cancel up to order " + toString(order) +
                      "; raise the order");
  }
  if (series.terms().begin()->first > rawMin) {
    series = aggregate(series.terms().begin()->first + order);
  }
  NormalizedSeries normalized = leadingExponentAndNormalize(series);

  ZhatResult out;
  out.spinc = a;
  out.delta = normalized.delta;
  out.tail = std::move(normalized.tail);
  out.etaPow2 = normalized.etaPow2;
  out.prefactorSign = engine.sign();
  out.truncationOrder = order;
  return out;
}

Rational deltaA(const PlumbingGraph& g, const SpinCRep& a, const ZhatOptions& options) {
  return computeZhat(g, a, Rational(0), options).delta;
}

}  // namespace zhat
