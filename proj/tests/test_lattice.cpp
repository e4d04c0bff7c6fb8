#include <doctest.h>

#include "adecox/lattice.hpp"

using namespace adecox;

namespace {

std::vector<SurfaceFamily> families() {
  std::vector<SurfaceFamily> fs;
  for (int n = 3; n <= 8; ++n) fs.push_back({Kind::E, n});
  for (int n = 2; n <= 9; ++n) fs.push_back({Kind::D, n});
  for (int n = 1; n <= 9; ++n) fs.push_back({Kind::A, n});
  return fs;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("structure of every family") {
    for (const auto& f : families()) {
      CAPTURE(f.label());
      const auto L = build_lattice(f);
      CHECK(L.rank() == f.n + 2);
      CHECK(lattice_defect(L).empty());
      CHECK(std::llround(L.gram.cast<double>().determinant()) * std::llround(L.gram.cast<double>().determinant()) == 1);
      // Lorentzian: exactly one positive eigenvalue.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(L.gram.cast<double>());
      CHECK((eig.eigenvalues().array() > 0).count() == 1);
    }
  }

  TEST_CASE("canonical class and C") {
    const auto E6 = build_lattice({Kind::E, 6});
    CHECK(E6.basis_labels.size() == 8);
    CHECK(same(E6.K, int_vector({-3, 1, 1, 1, 1, 1, 1, 1})));
    CHECK(same(E6.C, E6.l(7)));
    CHECK(pair(E6, E6.K, E6.K) == 2);
    CHECK(degree(E6, E6.l(1)) == 1);

    const auto D4 = build_lattice({Kind::D, 4});
    CHECK(D4.basis_labels == std::vector<std::string>{"f", "s", "l1", "l2", "l3", "l4"});
    CHECK(pair(D4, D4.unit("f"), D4.unit("s")) == 1);
    CHECK(pair(D4, D4.C, D4.C) == 0);
    CHECK(pair(D4, D4.C, D4.K) == -2);
    CHECK(pair(D4, D4.K, D4.K) == 4);

    const auto A3 = build_lattice({Kind::A, 3});
    CHECK(same(A3.C, A3.unit("h")));
    CHECK(pair(A3, A3.C, A3.K) == -3);
    CHECK(A3.c_index() == 0);
    CHECK(E6.c_index() == 7);
  }

  TEST_CASE("invalid families") {
    for (SurfaceFamily f : {SurfaceFamily{Kind::E, 2}, SurfaceFamily{Kind::E, 9}, SurfaceFamily{Kind::D, 1},
                            SurfaceFamily{Kind::A, 0}}) {
      CHECK_FALSE(f.valid());
      CHECK_THROWS_AS(build_lattice(f), std::invalid_argument);
    }
    CHECK_THROWS_AS(parse_kind("B"), std::invalid_argument);
    CHECK(parse_kind("e") == Kind::E);
  }

  TEST_CASE("classes by label") {
    const auto L = build_lattice({Kind::E, 6});
    const auto d = L.cls({{"h", 2}, {"l1", -1}, {"l2", -1}});
    CHECK(L.format(d) == "2h-l1-l2");
    CHECK(L.format(L.zero()) == "0");
    CHECK(L.format(-L.unit("h")) == "-h");
    CHECK_THROWS_AS(L.unit("f"), std::invalid_argument);
    CHECK_THROWS_AS(pair(L, d, int_vector({1, 0})), std::invalid_argument);
  }

  TEST_CASE("mutations are detected") {
    auto L = build_lattice({Kind::E, 5});
    L.gram(0, 0) = 2;
    CHECK_FALSE(lattice_defect(L).empty());
    L = build_lattice({Kind::E, 5});
    L.gram(0, 1) = 1;
    CHECK(lattice_defect(L) == "gram matrix is not symmetric");
    L = build_lattice({Kind::D, 3});
    L.C = L.unit("s") + L.unit("f");
    CHECK_FALSE(lattice_defect(L).empty());
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(parse_rational("+7/-14") == Rational(-1, 2));
    CHECK(to_string(parse_rational("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("8/4")) == "2");
    for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "--1", "1 "})
      CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}
