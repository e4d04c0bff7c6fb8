#include <doctest.h>

#include <random>

#include "adecox/exact_linalg.hpp"

using namespace adecox;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int spread) {
  std::uniform_int_distribution<std::int64_t> d(-spread, spread);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("determinant agrees with floating point on small integer matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 7;
      const IntMatrix m = random_matrix(rng, n, n, 4);
      const double approx = m.cast<double>().determinant();
      CHECK(determinant(m).convert_to<double>() == doctest::Approx(approx).epsilon(1e-9));
    }
  }

  TEST_CASE("determinant of classical Cartan matrices") {
    IntMatrix a3(3, 3);
    a3 << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    CHECK(determinant(a3) == 4);
    CHECK(determinant(IntMatrix::Identity(5, 5)) == 1);
    CHECK(determinant(IntMatrix::Zero(3, 3)) == 0);
  }

  TEST_CASE("rank of products of random factors") {
    std::mt19937_64 rng(5);
    for (int r = 0; r <= 4; ++r) {
      const IntMatrix m = random_matrix(rng, 6, r, 3) * random_matrix(rng, r, 7, 3);
      const auto expected = Eigen::FullPivLU<Eigen::MatrixXd>(m.cast<double>()).rank();
      CHECK(rank(m) == expected);
      Matrix<Rational> q(m.rows(), m.cols());
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j), 3);
      CHECK(rank(q) == expected);
    }
  }

  TEST_CASE("inverse is exact") {
    IntMatrix e6(6, 6);
    e6 << 2, 0, -1, 0, 0, 0, 0, 2, 0, -1, 0, 0, -1, 0, 2, -1, 0, 0, 0, -1, -1, 2, -1, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0, 0,
        -1, 2;
    const Matrix<Rational> m = e6.cast<Rational>();
    const Matrix<Rational> inv = inverse(m);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Rational s = 0;
        for (int k = 0; k < 6; ++k) s += m(i, k) * inv(k, j);
        CHECK(s == (i == j ? 1 : 0));
      }
    CHECK(inv(0, 0) == Rational(4, 3));
    Matrix<Rational> singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
  }

  TEST_CASE("signature matches eigenvalue signs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const IntMatrix b = random_matrix(rng, 5, 5, 2);
      IntMatrix s = b + b.transpose();
      s(0, 0) = 0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.cast<double>());
      Signature expected;
      for (double v : eig.eigenvalues()) {
        if (v > 1e-9) ++expected.positive;
        else if (v < -1e-9) ++expected.negative;
        else ++expected.zero;
      }
      const Signature got = signature(s.cast<Rational>());
      CHECK(got.positive == expected.positive);
      CHECK(got.negative == expected.negative);
      CHECK(got.zero == expected.zero);
    }
  }
}
