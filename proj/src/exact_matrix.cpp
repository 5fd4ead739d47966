#include "zhat/exact_matrix.hpp"

#include "zhat/errors.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

ExactMatrix::ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

ExactMatrix::ExactMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw std::invalid_argument("ExactMatrix: entry count mismatch");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("ExactMatrix: matrix must be square");
    for (std::int64_t x : row) a_.emplace_back(static_cast<long>(x));
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> values) {
  ExactMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

bool ExactMatrix::isSymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool ExactMatrix::isIntegral() const {
  for (const Rational& x : a_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

Rational ExactMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("ExactMatrix: size mismatch");
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& lhs = (*this)(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += lhs * rhs(k, j);
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator-() const { return scaled(Rational(-1)); }

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
  ExactMatrix out = *this;
  for (Rational& x : out.a_) x *= factor;
  return out;
}

RationalVector ExactMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != n_) throw std::invalid_argument("ExactMatrix: vector size mismatch");
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

RationalVector ExactMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != n_) throw std::invalid_argument("ExactMatrix: vector size mismatch");
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

ExactMatrix ExactMatrix::principalSubmatrix(std::span<const std::size_t> indices) const {
  ExactMatrix out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(indices[i], indices[j]);
  }
  return out;
}

const char* toString(DefinitenessClass c) {
  switch (c) {
    case DefinitenessClass::NegativeDefinite: return "negative-definite";
    case DefinitenessClass::WeaklyNegativeDefinite: return "weakly-negative-definite";
    case DefinitenessClass::Other: return "indefinite/other";
  }
  return "?";
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

Integer bareissDeterminant(IntRows a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

/// Pivots of Gaussian elimination without pivoting, or empty if a pivot vanishes early.
std::vector<Rational> unpivotedPivots(const ExactMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> w(m.size() * m.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m(i, j);
  }
  std::vector<Rational> pivots;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = w[k * n + k];
    pivots.push_back(pivot);
    if (pivot == 0) return pivots;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w[i * n + k] == 0) continue;
      const Rational f = w[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) w[i * n + j] -= f * w[k * n + j];
    }
  }
  return pivots;
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
  const std::size_t n = m.size();
  IntRows rows(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer rowLcm = 1;
    for (std::size_t j = 0; j < n; ++j) rowLcm = lcmOf(rowLcm, m(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = m(i, j).get_num() * (rowLcm / m(i, j).get_den());
    }
    scale *= rowLcm;
  }
  return makeRational(bareissDeterminant(std::move(rows)), scale);
}

ExactMatrix inverse(const ExactMatrix& m) {
  const std::size_t n = m.size();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivotRow = col;
    while (pivotRow < n && a(pivotRow, col) == 0) ++pivotRow;
    if (pivotRow == n) throw SingularMatrix("matrix is singular");
    if (pivotRow != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivotRow, j));
        std::swap(inv(col, j), inv(pivotRow, j));
      }
    }
    const Rational pivot = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Signature signatureAndPositiveCount(const ExactMatrix& m) {
  if (!m.isSymmetric()) throw std::invalid_argument("signature requires a symmetric matrix");
  const std::size_t n = m.size();
  ExactMatrix a = m;
  Signature sig;
  auto addToIndex = [&](std::size_t k, std::size_t j) {
    // congruence by e_k <- e_k + e_j
    for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
  };
  auto swapIndices = [&](std::size_t k, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swapIndices(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw SingularMatrix("zero eigenvalue in signature computation");
        addToIndex(k, j);
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0) ++sig.pi;
    sig.sigma += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return sig;
}

bool isNegativeDefinite(const ExactMatrix& m) {
  if (!m.isSymmetric()) return false;
  const auto pivots = unpivotedPivots(m);
  if (pivots.size() != m.size()) return false;
  for (const Rational& p : pivots) {
    if (p >= 0) return false;
  }
  return true;
}

bool isPositiveDefinite(const ExactMatrix& m) {
  if (!m.isSymmetric()) return false;
  const auto pivots = unpivotedPivots(m);
  if (pivots.size() != m.size()) return false;
  for (const Rational& p : pivots) {
    if (p <= 0) return false;
  }
  return true;
}

DefinitenessClass classifyDefiniteness(const ExactMatrix& m,
                                       std::span<const std::size_t> highDegree) {
  if (!m.isSymmetric()) throw std::invalid_argument("definiteness requires a symmetric matrix");
  if (determinant(m) == 0) throw SingularMatrix("matrix is singular");
  if (isNegativeDefinite(m)) return DefinitenessClass::NegativeDefinite;
  for (std::size_t idx : highDegree) {
    if (idx >= m.size()) throw std::out_of_range("high-degree index out of range");
  }
  const ExactMatrix block = inverse(m).principalSubmatrix(highDegree);
  if (highDegree.empty() || isNegativeDefinite(block)) {
    return DefinitenessClass::WeaklyNegativeDefinite;
  }
  return DefinitenessClass::Other;
}

SmithForm smithNormalForm(const ExactMatrix& m) {
  if (!m.isIntegral()) throw std::invalid_argument("Smith normal form needs an integer matrix");
  const std::size_t n = m.size();
  IntRows a(n, std::vector<Integer>(n)), u(n, std::vector<Integer>(n)),
      v(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num();
    u[i][i] = 1;
    v[i][i] = 1;
  }
  auto swapRows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swapCols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(a[r][i], a[r][j]);
      std::swap(v[r][i], v[r][j]);
    }
  };
  // row_i += f * row_t
  auto addRow = [&](std::size_t i, std::size_t t, const Integer& f) {
    for (std::size_t c = 0; c < n; ++c) {
      a[i][c] += f * a[t][c];
      u[i][c] += f * u[t][c];
    }
  };
  // col_j += f * col_t
  auto addCol = [&](std::size_t j, std::size_t t, const Integer& f) {
    for (std::size_t r = 0; r < n; ++r) {
      a[r][j] += f * a[r][t];
      v[r][j] += f * v[r][t];
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          if (bi == n || absOf(a[i][j]) < absOf(a[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n) break;  // remaining block is zero
      if (bi != t) swapRows(bi, t);
      if (bj != t) swapCols(bj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        addRow(i, t, Integer(-q));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        addCol(j, t, Integer(-q));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            addRow(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t r = 0; r < n; ++r) {
        a[r][t] = -a[r][t];
        v[r][t] = -v[r][t];
      }
    }
  }

  auto toMatrix = [n](const IntRows& rows) {
    ExactMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
    }
    return out;
  };
  return SmithForm{toMatrix(u), toMatrix(a), toMatrix(v)};
}

}  // namespace zhat
