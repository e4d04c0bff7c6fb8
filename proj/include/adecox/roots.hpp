#pragma once

#include <string>
#include <vector>

#include "adecox/lattice.hpp"

namespace adecox {

/// Cartan-level data of a simply laced root system. Everything on the representation side
/// (weights, characters, dimensions) needs only this.
struct RootDatum {
  /// cartan(i, j) = (alpha_i, alpha_j) for roots normalized to norm 2; symmetric.
  IntMatrix cartan;
  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  std::vector<IntVector> positive_roots;
  /// Inverse Cartan matrix: the Gram matrix of the fundamental weights.
  Matrix<Rational> inverse_cartan;

  Eigen::Index rank() const { return cartan.rows(); }
  /// Dynkin labels of a root given in simple-root coordinates.
  WeightVector root_labels(const IntVector& coeffs) const { return cartan * coeffs; }
};

/// Builds positive roots by closure from the simple roots. Simply laced: for a positive root
/// b != a_i, b + a_i is a root exactly when (b, a_i) = -1.
RootDatum root_datum_from_cartan(const IntMatrix& cartan);

struct DynkinComponent {
  char kind = 'A';
  int rank = 0;
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

struct DynkinType {
  std::vector<DynkinComponent> components;  // rank-descending
  std::string label() const;                // e.g. "E6", "A2×A1"
  /// Product of the classical Cartan determinants: n+1 for A_n, 4 for D_n, 3/2/1 for E6/E7/E8.
  std::int64_t expected_determinant() const;
};

/// Graph-isomorphism classification of a simply laced Cartan matrix. Throws std::logic_error
/// for a diagram that is not a disjoint union of A/D/E graphs.
DynkinType classify_type(const IntMatrix& cartan);

struct RootSystemData {
  IntersectionLattice lattice;
  std::vector<DivisorClass> simple_roots;
  IntMatrix cartan;
  std::vector<DivisorClass> positive_roots;
  RootDatum datum;
  DynkinType type;

  Eigen::Index rank() const { return cartan.rows(); }
};

/// Simple roots in the order alpha_1, ..., alpha_n:
///   E: alpha_1 = -h + l1 + l2 + l3, alpha_i = l_i - l_{i-1};
///   D: alpha_1 = -f + l1 + l2,      alpha_i = l_i - l_{i-1};
///   A: alpha_i = l_{i+1} - l_i.
std::vector<DivisorClass> simple_roots(const IntersectionLattice& L);

RootSystemData build_root_system(const IntersectionLattice& L);

inline DynkinType classify_type(const RootSystemData& R) { return classify_type(R.cartan); }
inline const std::vector<DivisorClass>& positive_roots(const RootSystemData& R) { return R.positive_roots; }

/// s_a(x) = x + (x.a) a. Throws std::invalid_argument unless a^2 = -2.
DivisorClass reflect(const IntersectionLattice& L, const DivisorClass& x, const DivisorClass& alpha);

/// Closure of {seed} under the simple reflections, sorted lexicographically.
std::vector<DivisorClass> weyl_orbit(const RootSystemData& R, const DivisorClass& seed);

/// The class whose weight is the highest weight of the line representation:
/// l_n for the D- and E-families, l_{n+1} for the A-family.
DivisorClass highest_line_class(const IntersectionLattice& L);

}  // namespace adecox
