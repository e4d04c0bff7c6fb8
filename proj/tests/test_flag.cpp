#include <doctest.h>

#include <random>

#include "adecox/flag.hpp"

using namespace adecox;

namespace {

SurfaceConfigD pts(std::initializer_list<int> xs) {
  SurfaceConfigD c;
  for (int x : xs) c.points.push_back(Rational(x));
  return c;
}

void check_solution(const std::vector<Rational>& c, const SurfaceConfigD& cfg) {
  REQUIRE(c.size() == cfg.points.size());
  Rational s = 0, st = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i] != 0);
    s += c[i];
    st += c[i] * cfg.points[i];
  }
  CHECK(s == 0);
  CHECK(st == 0);
}

}  // namespace

TEST_SUITE("flag") {
  TEST_CASE("cone quadric") {
    const auto R3 = build_root_system(build_lattice({Kind::D, 3}));
    const auto q = cone_quadric_D(R3);
    REQUIRE(q.quadrics.size() == 1);
    CHECK(q.quadrics[0].size() == 3);
    CHECK(q.variables[0].name == "X1");
    CHECK(q.variables[1].name == "Y1");
    CHECK(is_homogeneous(q));
    for (const auto& t : q.quadrics[0]) {
      WeightVector w = WeightVector::Zero(3);
      for (int v : t.monomial) w += q.variables[static_cast<std::size_t>(v)].weight;
      CHECK(w.isZero());
    }
    CHECK(cone_quadric_D(build_root_system(build_lattice({Kind::D, 5}))).quadrics[0].size() == 5);
    CHECK_THROWS_AS(cone_quadric_D(build_root_system(build_lattice({Kind::D, 2}))), std::invalid_argument);
    CHECK_THROWS_AS(cone_quadric_D(build_root_system(build_lattice({Kind::E, 6}))), std::invalid_argument);
  }

  TEST_CASE("cone coefficients") {
    CHECK(cone_coefficients(pts({0, 1, 2})) == std::vector<Rational>{-1, 2, -1});
    CHECK(cone_coefficients(pts({0, 1, 2, 3})) == std::vector<Rational>{1, -1, -1, 1});
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    for (int n = 3; n <= 10; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        SurfaceConfigD c;
        while (static_cast<int>(c.points.size()) < n) {
          const Rational t(num(rng), den(rng));
          if (std::find(c.points.begin(), c.points.end(), t) == c.points.end()) c.points.push_back(t);
        }
        CAPTURE(n);
        check_solution(cone_coefficients(c), c);
      }
    }
    CHECK_THROWS_AS(cone_coefficients(pts({0, 1})), std::invalid_argument);
  }

  TEST_CASE("embedding is certified") {
    for (int n = 3; n <= 6; ++n) {
      SurfaceConfigD c;
      for (int i = 0; i < n; ++i) c.points.push_back(Rational(2 * i - 3, i + 1));
      const auto R = build_root_system(build_lattice({Kind::D, n}));
      const auto e = embed_cox_into_cone_D(R, c);
      CHECK(e.certified);
      CHECK(e.rank_before == n - 2);
      CHECK(e.rank_after == e.rank_before);
      CHECK(e.cone.substitution.size() == static_cast<std::size_t>(2 * n));
      for (const auto& s : e.cone.substitution) CHECK(s.scalar != 0);
      check_solution(e.coefficients, c);
    }
    const auto R3 = build_root_system(build_lattice({Kind::D, 3}));
    CHECK_THROWS_AS(embed_cox_into_cone_D(R3, pts({0, 1, 1})), std::invalid_argument);
  }

  TEST_CASE("A-family report") {
    const auto rep = an_report(build_root_system(build_lattice({Kind::A, 2})), 4);
    CHECK(rep.generators == 3);
    CHECK(rep.relations == 0);
    CHECK(rep.dims == std::vector<std::int64_t>{1, 3, 6, 10, 15});
    CHECK(rep.pass());
    CHECK(an_report(build_root_system(build_lattice({Kind::A, 1})), 3).dims == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(an_report(build_root_system(build_lattice({Kind::A, 4})), 2).weights_distinct);
    CHECK_THROWS_AS(an_report(build_root_system(build_lattice({Kind::D, 3})), 2), std::invalid_argument);
  }

  TEST_CASE("tensor factorizations") {
    const auto e3 = appendix_tensor_check(build_root_system(build_lattice({Kind::E, 3})));
    CHECK(e3.left.size() == 3);
    CHECK(e3.right.size() == 2);
    CHECK(e3.pass());
    CHECK_FALSE(e3.segre.has_value());

    const auto L = build_lattice({Kind::D, 2});
    const auto d2 = appendix_tensor_check(build_root_system(L));
    CHECK(d2.pass());
    REQUIRE(d2.segre.has_value());
    CHECK(d2.segre->quadrics[0].size() == 2);
    CHECK(same(d2.left[0] + d2.right[0], L.l(1)));
    CHECK_THROWS_AS(appendix_tensor_check(build_root_system(build_lattice({Kind::E, 6}))), std::invalid_argument);
  }
}
