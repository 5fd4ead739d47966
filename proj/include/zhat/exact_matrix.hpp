#pragma once

#include "zhat/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zhat {

/// Square matrix of exact rationals, stored row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n);
  ExactMatrix(std::size_t n, std::vector<Rational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const Rational> values);

  std::size_t size() const { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool isSymmetric() const;
  bool isIntegral() const;
  Rational trace() const;

  ExactMatrix transposed() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const Rational& factor) const;
  RationalVector apply(std::span<const Rational> v) const;
  RationalVector apply(std::span<const Integer> v) const;

  /// Rows/columns restricted to `indices`, in the given order.
  ExactMatrix principalSubmatrix(std::span<const std::size_t> indices) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

enum class DefinitenessClass { NegativeDefinite, WeaklyNegativeDefinite, Other };

const char* toString(DefinitenessClass c);

struct Signature {
  int sigma = 0;  ///< #positive - #negative eigenvalues
  int pi = 0;     ///< #positive eigenvalues
};

struct SmithForm {
  ExactMatrix u;  ///< unimodular, row operations
  ExactMatrix d;  ///< diagonal, d1 | d2 | ..., non-negative
  ExactMatrix v;  ///< unimodular, column operations
};

/// Fraction-free (Bareiss) determinant; rational input is scaled row-wise to integers first.
Rational determinant(const ExactMatrix& m);

/// Gauss-Jordan inverse. Throws SingularMatrix.
ExactMatrix inverse(const ExactMatrix& m);

/// Inertia by symmetric congruence (Lagrange) diagonalization. Throws SingularMatrix.
Signature signatureAndPositiveCount(const ExactMatrix& m);

/// Sylvester test: leading principal minors alternate in sign, starting negative.
bool isNegativeDefinite(const ExactMatrix& m);
bool isPositiveDefinite(const ExactMatrix& m);

/// NegativeDefinite if m is; otherwise WeaklyNegativeDefinite if the principal block of
/// m^-1 on `highDegree` is negative definite; otherwise Other. Throws SingularMatrix.
DefinitenessClass classifyDefiniteness(const ExactMatrix& m,
                                       std::span<const std::size_t> highDegree);

/// U * m * V = D for integer m. Throws std::invalid_argument for non-integral input.
SmithForm smithNormalForm(const ExactMatrix& m);

}  // namespace zhat
