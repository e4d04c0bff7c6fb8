#include <doctest.h>

#include <random>

#include "adecox/weights.hpp"

using namespace adecox;

namespace {

RootSystemData system(Kind k, int n) { return build_root_system(build_lattice({k, n})); }

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("Weyl dimensions") {
    const auto E6 = system(Kind::E, 6);
    const auto E8 = system(Kind::E, 8);
    const WeightVector w6 = weight_of(E6, highest_line_class(E6.lattice));
    CHECK(weyl_dim(E6.datum, w6) == 27);
    CHECK(weyl_dim(E6.datum, 2 * w6) == 351);
    const WeightVector w8 = weight_of(E8, highest_line_class(E8.lattice));
    CHECK(weyl_dim(E8.datum, w8) == 248);
    CHECK(weyl_dim(E8.datum, 2 * w8) == 27000);
    CHECK(weyl_dim(E8.datum, WeightVector::Zero(8)) == 1);
    CHECK_THROWS_AS(weyl_dim(E8.datum, -w8), std::invalid_argument);
  }

  TEST_CASE("Freudenthal totals agree with the Weyl dimension formula") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> label(0, 2);
    for (auto [k, n] : {std::pair{Kind::A, 2}, {Kind::A, 3}, {Kind::D, 4}, {Kind::E, 4}, {Kind::E, 6}}) {
      const auto R = system(k, n);
      for (int trial = 0; trial < 6; ++trial) {
        WeightVector lam(R.rank());
        for (Eigen::Index i = 0; i < R.rank(); ++i) lam(i) = label(rng);
        if (R.rank() >= 6) lam = lam.cwiseMin(1);
        const auto m = freudenthal(R.datum, lam);
        CHECK(BigInt(m.total()) == weyl_dim(R.datum, lam));
        CHECK(is_weyl_invariant(R.datum, m));
        CHECK(m.multiplicity(lam) == 1);
      }
    }
  }

  TEST_CASE("small characters") {
    IntMatrix a1(1, 1);
    a1 << 2;
    const auto A1 = root_datum_from_cartan(a1);
    const auto m = freudenthal(A1, int_vector({4}));
    CHECK(m.total() == 5);
    for (int w = -4; w <= 4; w += 2) CHECK(m.multiplicity(int_vector({w})) == 1);
    CHECK(m.multiplicity(int_vector({1})) == 0);

    // Adjoint of A2: six roots and a zero weight of multiplicity 2.
    IntMatrix a2(2, 2);
    a2 << 2, -1, -1, 2;
    const auto adj = freudenthal(root_datum_from_cartan(a2), int_vector({1, 1}));
    CHECK(adj.total() == 8);
    CHECK(adj.multiplicity(int_vector({0, 0})) == 2);

    // D4 adjoint: zero weight multiplicity equals the rank.
    const auto D4 = system(Kind::D, 4);
    const auto top = dominant_conjugate(D4.datum, D4.datum.root_labels(D4.datum.positive_roots.back()));
    const auto ad = freudenthal(D4.datum, top);
    CHECK(ad.total() == 28);
    CHECK(ad.multiplicity(WeightVector::Zero(4)) == 4);
  }

  TEST_CASE("inner products and reflections") {
    IntMatrix a1(1, 1);
    a1 << 2;
    const auto A1 = root_datum_from_cartan(a1);
    CHECK(inner_product(A1, int_vector({1}), int_vector({1})) == Rational(1, 2));
    const auto E7 = system(Kind::E, 7);
    const WeightVector w = weight_of(E7, E7.lattice.cls({{"h", 1}, {"l1", -1}, {"l2", -1}}));
    const auto d = dominant_conjugate(E7.datum, w);
    CHECK(is_dominant(d));
    const auto orbit = weight_orbit(E7.datum, w);
    CHECK(std::binary_search(orbit.begin(), orbit.end(), d, LexLess{}));
    CHECK(orbit.size() == 56);
    for (Eigen::Index i = 0; i < E7.rank(); ++i) {
      const auto s = simple_reflection(E7.datum, w, i);
      CHECK(inner_product(E7.datum, s, s) == inner_product(E7.datum, w, w));
      CHECK(same(simple_reflection(E7.datum, s, i), w));
    }
  }

  TEST_CASE("weights of classes") {
    const auto E6 = system(Kind::E, 6);
    CHECK(same(weight_of(E6, E6.lattice.K), WeightVector::Zero(6)));
    CHECK(same(weight_of(E6, E6.lattice.C), WeightVector::Zero(6)));
    CHECK(is_dominant(weight_of(E6, highest_line_class(E6.lattice))));
    const auto lines = line_weight_multiset(E6);
    CHECK(lines.total() == 27);
    CHECK(lines.distinct() == 27);
    CHECK(line_weight_multiset(system(Kind::E, 8)).total() == 248);
  }

  TEST_CASE("multiset arithmetic") {
    WeightMultiset a, b;
    a.add(int_vector({1, 0}), 2);
    a.add(int_vector({0, 1}));
    b.add(int_vector({1, 0}));
    const auto d = difference(a, b);
    CHECK(d.total() == 2);
    CHECK(d + b == a);
    CHECK_THROWS_AS(difference(b, a + a + a), std::logic_error);
    CHECK(sym2_multiset(a).total() == 6);
    CHECK(sym2_multiset(a).multiplicity(int_vector({2, 0})) == 3);
  }

  TEST_CASE("Sym2 decompositions for every family") {
    std::vector<std::pair<Kind, int>> fs;
    for (int n = 3; n <= 7; ++n) fs.push_back({Kind::E, n});
    for (int n = 2; n <= 9; ++n) fs.push_back({Kind::D, n});
    for (int n = 1; n <= 9; ++n) fs.push_back({Kind::A, n});
    for (auto [k, n] : fs) {
      CAPTURE(n);
      const auto R = system(k, n);
      const auto d = decompose_sym2(R);
      CHECK(d.matches);
      CHECK(d.sym2 == d.v_part + d.w_part);
      CHECK(verify_weight_lemma(R).pass());
    }
    const auto D5 = decompose_sym2(system(Kind::D, 5));
    CHECK(D5.v_part.total() == 54);
    CHECK(D5.w_part.total() == 1);
  }
}
