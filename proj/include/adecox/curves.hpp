#pragma once

#include <string>
#include <vector>

#include "adecox/lattice.hpp"

namespace adecox {

enum class CurveKind { roots, lines, rulings };

std::string to_string(CurveKind k);
CurveKind parse_curve_kind(const std::string& text);

/// Self-intersection and canonical degree defining each kind.
struct CurveEquations {
  std::int64_t square;
  std::int64_t canonical;
};
CurveEquations equations_for(CurveKind k);

/// A finite set of classes with D^2, D.K fixed and D.C = 0, sorted lexicographically.
struct ClassSet {
  IntersectionLattice lattice;
  CurveKind kind = CurveKind::lines;
  std::vector<DivisorClass> classes;

  std::size_t size() const { return classes.size(); }
  bool contains(const DivisorClass& d) const;
};

/// Range of the leading coefficient (h in the E-family, f in the D-family; fixed at 0 for A)
/// forced by Cauchy-Schwarz, with a one-line derivation for reports.
struct SearchBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::string derivation;
};

SearchBounds search_bounds(const IntersectionLattice& L, std::int64_t square, std::int64_t canonical);

/// Every class D with D^2 = square, D.K = canonical and D.C = 0. Complete by construction.
std::vector<DivisorClass> solve_class_equations(const IntersectionLattice& L, std::int64_t square,
                                                std::int64_t canonical);

ClassSet enumerate(const IntersectionLattice& L, CurveKind kind);
ClassSet enumerate_roots(const IntersectionLattice& L);
ClassSet enumerate_lines(const IntersectionLattice& L);
ClassSet enumerate_rulings(const IntersectionLattice& L);

/// Unordered pairs {l, l'} of lines with l + l' = target (l = l' only if 2l = target).
std::int64_t pairs_of_lines_summing_to(const IntersectionLattice& L, const DivisorClass& target,
                                       const ClassSet& lines);

}  // namespace adecox
