#pragma once

#include <stdexcept>

#include "adecox/types.hpp"

namespace adecox {

/// Determinant by Bareiss elimination. Every intermediate division is exact.
template <typename Derived>
BigInt determinant(const Eigen::MatrixBase<Derived>& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = input.rows();
  if (n == 0) return BigInt(1);
  Matrix<BigInt> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = BigInt(input(i, j));
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Fraction-free (Bareiss) rank over the integers. Consumes its argument.
inline Eigen::Index rank_fraction_free(Matrix<BigInt> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(r).swap(m.row(p));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Exact rank of a rational matrix: rows are cleared of denominators, then eliminated fraction-free.
inline Eigen::Index rank(const Matrix<Rational>& m) {
  Matrix<BigInt> scaled(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, BigInt(denominator(m(i, j))));
    for (Eigen::Index j = 0; j < m.cols(); ++j) scaled(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  return rank_fraction_free(std::move(scaled));
}

inline Eigen::Index rank(const IntMatrix& m) { return rank_fraction_free(m.cast<BigInt>()); }

/// Gauss-Jordan inverse over the rationals. Throws std::domain_error when singular.
inline Matrix<Rational> inverse(const Matrix<Rational>& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = input.rows();
  Matrix<Rational> a = input;
  Matrix<Rational> inv = Matrix<Rational>::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    a.row(k).swap(a.row(p));
    inv.row(k).swap(inv.row(p));
    const Rational pivot = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Inertia of a symmetric rational form by congruence diagonalization.
inline Signature signature(Matrix<Rational> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("signature: matrix is not square");
  const Eigen::Index n = a.rows();
  Signature s;
  auto swap_both = [&](Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // (i, j) yields a nonzero diagonal after adding basis vector j to i.
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = k; i < n && bi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) {
        s.zero += static_cast<int>(n - k);
        return s;
      }
      a.row(bi) += a.row(bj);
      a.col(bi) += a.col(bj);
      p = bi;
    }
    if (p != k) swap_both(p, k);
    const Rational pivot = a(k, k);
    (pivot > 0 ? s.positive : s.negative) += 1;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / pivot;
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      for (Eigen::Index j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return s;
}

}  // namespace adecox
