#include <doctest.h>

#include <random>

#include "adecox/curves.hpp"
#include "adecox/exact_linalg.hpp"
#include "adecox/roots.hpp"

using namespace adecox;

TEST_SUITE("roots") {
  TEST_CASE("Dynkin types") {
    const std::pair<SurfaceFamily, const char*> cases[] = {
        {{Kind::E, 3}, "A2×A1"}, {{Kind::E, 4}, "A4"}, {{Kind::E, 5}, "D5"}, {{Kind::E, 6}, "E6"},
        {{Kind::E, 7}, "E7"},    {{Kind::E, 8}, "E8"}, {{Kind::D, 2}, "A1×A1"}, {{Kind::D, 3}, "A3"},
        {{Kind::D, 4}, "D4"},    {{Kind::D, 7}, "D7"}, {{Kind::A, 1}, "A1"},    {{Kind::A, 6}, "A6"}};
    for (const auto& [f, label] : cases) {
      CAPTURE(f.label());
      const auto R = build_root_system(build_lattice(f));
      const auto t = classify_type(R);
      CHECK(t.label() == label);
      CHECK(determinant(R.cartan) == t.expected_determinant());
    }
  }

  TEST_CASE("Cartan entries and simple roots") {
    for (auto f : {SurfaceFamily{Kind::E, 8}, SurfaceFamily{Kind::D, 6}, SurfaceFamily{Kind::A, 5}}) {
      const auto R = build_root_system(build_lattice(f));
      for (Eigen::Index i = 0; i < R.rank(); ++i) {
        const auto& a = R.simple_roots[static_cast<std::size_t>(i)];
        CHECK(pair(R.lattice, a, a) == -2);
        CHECK(pair(R.lattice, a, R.lattice.K) == 0);
        CHECK(pair(R.lattice, a, R.lattice.C) == 0);
        for (Eigen::Index j = 0; j < R.rank(); ++j)
          if (i != j) CHECK((R.cartan(i, j) == 0 || R.cartan(i, j) == -1));
      }
    }
    // D-family: alpha_1 meets alpha_3 and not alpha_2.
    const auto D4 = build_root_system(build_lattice({Kind::D, 4}));
    CHECK(D4.cartan(0, 2) == -1);
    CHECK(D4.cartan(0, 1) == 0);
    const auto E6 = build_root_system(build_lattice({Kind::E, 6}));
    CHECK(pair(E6.lattice, E6.simple_roots[0], E6.simple_roots[3]) == 1);
    const auto A2 = build_root_system(build_lattice({Kind::A, 2}));
    CHECK(pair(A2.lattice, A2.simple_roots[0], A2.simple_roots[1]) == 1);
  }

  TEST_CASE("positive roots are half of the roots") {
    const int counts[] = {36, 63, 120};
    for (int n = 6; n <= 8; ++n) {
      const auto L = build_lattice({Kind::E, n});
      const auto R = build_root_system(L);
      CHECK(R.positive_roots.size() == static_cast<std::size_t>(counts[n - 6]));
      std::vector<DivisorClass> both = R.positive_roots;
      for (const auto& r : R.positive_roots) both.push_back(-r);
      sort_unique(both);
      CHECK(both == enumerate_roots(L).classes);
      CHECK(R.datum.positive_roots.back().sum() == (n == 6 ? 11 : n == 7 ? 17 : 29));  // Coxeter number - 1
    }
  }

  TEST_CASE("non-ADE diagrams are rejected") {
    IntMatrix affine(3, 3);
    affine << 2, -1, -1, -1, 2, -1, -1, -1, 2;
    CHECK_THROWS_AS(classify_type(affine), std::logic_error);
    CHECK_THROWS_AS(root_datum_from_cartan(affine), std::logic_error);
    IntMatrix e9 = IntMatrix::Zero(9, 9);
    for (int i = 0; i < 9; ++i) e9(i, i) = 2;
    for (int i = 0; i + 1 < 8; ++i) e9(i, i + 1) = e9(i + 1, i) = -1;
    e9(2, 8) = e9(8, 2) = -1;  // arms 2, 5, 1
    CHECK_THROWS_AS(classify_type(e9), std::logic_error);
    IntMatrix b2(2, 2);
    b2 << 2, -2, -1, 2;
    CHECK_THROWS_AS(classify_type(b2), std::logic_error);
  }

  TEST_CASE("reflections") {
    const auto L = build_lattice({Kind::E, 7});
    const auto R = build_root_system(L);
    const auto roots = enumerate_roots(L).classes;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> c(-4, 4);
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    for (int k = 0; k < 500; ++k) {
      DivisorClass x(L.rank());
      for (Eigen::Index i = 0; i < L.rank(); ++i) x(i) = c(rng);
      const auto& a = roots[pick(rng)];
      const auto y = reflect(L, x, a);
      CHECK(same(reflect(L, y, a), x));
      CHECK(pair(L, y, y) == pair(L, x, x));
      CHECK(pair(L, y, L.K) == pair(L, x, L.K));
    }
    CHECK(same(reflect(L, roots[0], roots[0]), -roots[0]));
    CHECK_THROWS_AS(reflect(L, L.l(1), L.l(2)), std::invalid_argument);
    CHECK(weyl_orbit(R, R.simple_roots[0]) == roots);
    CHECK(weyl_orbit(R, L.C).size() == 1);
  }

  TEST_CASE("highest line class") {
    CHECK(same(highest_line_class(build_lattice({Kind::A, 3})), build_lattice({Kind::A, 3}).l(4)));
    CHECK(same(highest_line_class(build_lattice({Kind::E, 6})), build_lattice({Kind::E, 6}).l(6)));
    CHECK(same(highest_line_class(build_lattice({Kind::D, 5})), build_lattice({Kind::D, 5}).l(5)));
  }
}
