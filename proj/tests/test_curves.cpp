#include <doctest.h>

#include "adecox/curves.hpp"
#include "adecox/oracles.hpp"

using namespace adecox;

TEST_SUITE("curves") {
  TEST_CASE("counts") {
    const int e_lines[] = {6, 10, 16, 27, 56, 240};
    const int e_rulings[] = {3, 5, 10, 27, 126, 2160};
    const int e_roots[] = {8, 20, 40, 72, 126, 240};
    for (int n = 3; n <= 8; ++n) {
      CAPTURE(n);
      const auto L = build_lattice({Kind::E, n});
      CHECK(enumerate_lines(L).size() == static_cast<std::size_t>(e_lines[n - 3]));
      CHECK(enumerate_rulings(L).size() == static_cast<std::size_t>(e_rulings[n - 3]));
      CHECK(enumerate_roots(L).size() == static_cast<std::size_t>(e_roots[n - 3]));
    }
    for (int n = 2; n <= 9; ++n) {
      const auto L = build_lattice({Kind::D, n});
      CHECK(enumerate_lines(L).size() == static_cast<std::size_t>(2 * n));
      CHECK(enumerate_roots(L).size() == static_cast<std::size_t>(2 * n * (n - 1)));
      const auto r = enumerate_rulings(L);
      REQUIRE(r.size() == 1);
      CHECK(same(r.classes[0], L.unit("f")));
    }
    for (int n = 1; n <= 9; ++n) {
      const auto L = build_lattice({Kind::A, n});
      const auto lines = enumerate_lines(L);
      CHECK(lines.size() == static_cast<std::size_t>(n + 1));
      for (int i = 1; i <= n + 1; ++i) CHECK(lines.contains(L.l(i)));
      CHECK(enumerate_roots(L).size() == static_cast<std::size_t>(n * (n + 1)));
      CHECK(enumerate_rulings(L).size() == 0);
    }
  }

  TEST_CASE("E6 lines in the classical shape") {
    const auto L = build_lattice({Kind::E, 6});
    const auto lines = enumerate_lines(L);
    CHECK(lines.contains(L.l(1)));
    CHECK(lines.contains(L.cls({{"h", 1}, {"l1", -1}, {"l2", -1}})));
    CHECK(lines.contains(L.cls({{"h", 2}, {"l1", -1}, {"l2", -1}, {"l3", -1}, {"l4", -1}, {"l5", -1}})));
    CHECK_FALSE(lines.contains(L.l(7)));  // C itself
  }

  TEST_CASE("every class solves its equations and the list is sorted") {
    for (auto f : {SurfaceFamily{Kind::E, 7}, SurfaceFamily{Kind::D, 5}, SurfaceFamily{Kind::A, 4}}) {
      const auto L = build_lattice(f);
      for (auto kind : {CurveKind::roots, CurveKind::lines, CurveKind::rulings}) {
        const auto set = enumerate(L, kind);
        const auto eq = equations_for(kind);
        const auto b = search_bounds(L, eq.square, eq.canonical);
        for (std::size_t i = 0; i < set.size(); ++i) {
          const auto& d = set.classes[i];
          CHECK(pair(L, d, d) == eq.square);
          CHECK(pair(L, d, L.K) == eq.canonical);
          CHECK(pair(L, d, L.C) == 0);
          CHECK(d(0) >= b.lo);
          CHECK(d(0) <= b.hi);
          if (i > 0) CHECK(LexLess{}(set.classes[i - 1], d));
        }
      }
    }
  }

  TEST_CASE("agrees with a naive box search") {
    // Rank 7 and 8: small boxes that still contain every solution twice over.
    const auto E5 = build_lattice({Kind::E, 5});
    CHECK(solve_class_equations(E5, -1, -1) == oracle::naive_class_search(E5, -1, -1, 3));
    CHECK(solve_class_equations(E5, 0, -2) == oracle::naive_class_search(E5, 0, -2, 3));
    const auto D5 = build_lattice({Kind::D, 5});
    CHECK(solve_class_equations(D5, -2, 0) == oracle::naive_class_search(D5, -2, 0, 2));
  }

  TEST_CASE("search bounds") {
    const auto L = build_lattice({Kind::E, 8});
    const auto b = search_bounds(L, 0, -2);
    std::int64_t top = 0;
    for (const auto& r : enumerate_rulings(L).classes) top = std::max(top, r(0));
    CHECK(b.lo >= 0);
    CHECK(b.hi >= top);
    CHECK_FALSE(b.derivation.empty());
    const auto A = build_lattice({Kind::A, 3});
    const auto ba = search_bounds(A, -1, -1);
    CHECK(ba.lo == 0);
    CHECK(ba.hi == 0);
  }

  TEST_CASE("pairs of lines") {
    const auto L = build_lattice({Kind::E, 6});
    const auto lines = enumerate_lines(L);
    const auto rulings = enumerate_rulings(L);
    for (const auto& r : rulings.classes) {
      std::int64_t brute = 0;
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i; j < lines.size(); ++j) brute += same(lines.classes[i] + lines.classes[j], r);
      CHECK(pairs_of_lines_summing_to(L, r, lines) == brute);
      CHECK(brute == 5);
    }
  }

  TEST_CASE("kind names") {
    CHECK(parse_curve_kind("rulings") == CurveKind::rulings);
    CHECK(to_string(CurveKind::roots) == "roots");
    CHECK_THROWS_AS(parse_curve_kind("conics"), std::invalid_argument);
  }
}
