#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adecox/curves.hpp"
#include "adecox/roots.hpp"
#include "adecox/weights.hpp"

namespace adecox {

/// Fiber positions t_1, ..., t_n of the blown-up points on the base line.
struct SurfaceConfigD {
  std::vector<Rational> points;
};

/// Throws std::invalid_argument unless there are exactly n pairwise distinct points.
void validate_points(const SurfaceConfigD& cfg, int n);

/// Sorted generator indices; a monomial of degree monomial.size().
using Monomial = std::vector<int>;

struct Term {
  Rational coeff;
  Monomial monomial;
};
using Polynomial = std::vector<Term>;

struct Generator {
  std::string name;
  DivisorClass cls;
};

struct Relation {
  Polynomial terms;
  DivisorClass cls;
};

struct CoxPresentation {
  IntersectionLattice lattice;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  DivisorClass class_of(const Monomial& m) const;
};

/// Degree-1 generators: the lines (x_i, y_i for D; x_i for A; e1.. for E), plus k1, k2 of
/// class -K+C for E8.
std::vector<Generator> cox_generators(const IntersectionLattice& L);

/// Presentation without explicit relations (A-family, D2, E-family generators only).
CoxPresentation cox_presentation(const IntersectionLattice& L);
/// D-family presentation with the quadrics of the given point configuration.
CoxPresentation cox_presentation(const IntersectionLattice& L, const SurfaceConfigD& cfg);

/// Quadrics (t2-ti) x1y1 + (ti-t1) x2y2 + (t1-t2) xiyi for 3 <= i <= n; empty for n < 3.
CoxPresentation dn_ideal(const IntersectionLattice& L, const SurfaceConfigD& cfg);

/// dim H^0(S, O(D)) for D.C = 0. E-family classes are limited to the zero class, lines,
/// rulings, -K+C (E7, E8) and -2K+2C (E8); anything else throws std::invalid_argument.
std::int64_t section_dim(const IntersectionLattice& L, const DivisorClass& d);

/// Monomials in the generators of class d, sorted. Throws std::length_error above cap.
std::vector<Monomial> monomials_of_class(const CoxPresentation& P, const DivisorClass& d,
                                         std::size_t cap = 200000);

/// Rows: (relation x monomial) products landing in class d; columns: monomials of class d.
Matrix<Rational> relation_matrix(const CoxPresentation& P, const DivisorClass& d,
                                 const std::vector<Monomial>& columns, std::size_t cap = 200000);

/// #monomials of class d minus the exact rank of the relation matrix in that class.
std::int64_t graded_piece_dim(const CoxPresentation& P, const DivisorClass& d, std::size_t cap = 200000);

struct HilbertCheck {
  DivisorClass cls;
  std::int64_t degree = 0;
  std::int64_t graded = 0;
  std::int64_t sections = 0;
  bool ok() const { return graded == sections; }
};

struct HilbertReport {
  std::vector<HilbertCheck> checks;
  std::size_t mismatches() const;
  bool pass() const { return mismatches() == 0; }
};

/// Compares graded_piece_dim with section_dim on every class of degree <= max_degree
/// that is a sum of generator classes (the zero class included).
HilbertReport verify_hilbert(const CoxPresentation& P, int max_degree);

struct RelationCensus {
  DivisorClass target;
  std::int64_t monomials = 0;
  std::int64_t sections = 0;
  std::int64_t relations = 0;
};

/// Degree-2 quadric count in a class: monomials - sections. Supported targets are rulings,
/// -K+C for E7 and -2K+2C for E8. Throws std::invalid_argument otherwise.
RelationCensus relation_census(const IntersectionLattice& L, const DivisorClass& target);
RelationCensus relation_census(const IntersectionLattice& L, const DivisorClass& target, const ClassSet& lines);

/// All supported census targets of a lattice, rulings first.
std::vector<DivisorClass> census_targets(const IntersectionLattice& L);

struct TorusCharacter {
  DivisorClass tsg;  // reduction modulo ZC: the C-coordinate is zeroed
  WeightVector tg;   // weight_of
};

TorusCharacter torus_character(const RootSystemData& R, const DivisorClass& d);

/// Hilbert function along the ray of a linearization: (dim H^0(k lin))_{k=0..max_k}.
/// Supported: f for the D-family, any l_i for the A-family.
std::vector<std::int64_t> git_hilbert(const IntersectionLattice& L, const DivisorClass& lin, int max_k);
/// Same ray, measured with graded_piece_dim on a presentation.
std::vector<std::int64_t> git_hilbert(const CoxPresentation& P, const DivisorClass& lin, int max_k);

/// Every relation's monomials share one Pic class, equal to the recorded class.
bool is_pic_homogeneous(const CoxPresentation& P);
/// Every relation's monomials share both torus characters.
bool is_torus_homogeneous(const RootSystemData& R, const CoxPresentation& P);

}  // namespace adecox
