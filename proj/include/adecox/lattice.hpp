#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "adecox/types.hpp"

namespace adecox {

enum class Kind { A, D, E };

char kind_letter(Kind k);
Kind parse_kind(const std::string& text);

/// One of the three families of ADE-surfaces with its rank parameter.
struct SurfaceFamily {
  Kind kind = Kind::E;
  int n = 6;

  /// Admissible ranges: A needs n >= 1, D needs n >= 2, E needs 3 <= n <= 8.
  bool valid() const;
  /// D2 and E3: the semisimple cases, where the line module is a tensor product.
  bool semisimple_case() const;
  std::string label() const;

  friend bool operator==(const SurfaceFamily&, const SurfaceFamily&) = default;
};

/// Picard lattice of an ADE-surface in its fixed basis.
///
/// E-family: basis (h, l1, ..., l_{n+1}), C = l_{n+1}.
/// D-family: basis (f, s, l1, ..., ln) with f.s = 1, C = f.
/// A-family: basis (h, l1, ..., l_{n+1}), C = h.
struct IntersectionLattice {
  SurfaceFamily family;
  std::vector<std::string> basis_labels;
  IntMatrix gram;
  DivisorClass K;
  DivisorClass C;

  Eigen::Index rank() const { return gram.rows(); }
  /// Basis vector for a label such as "h", "f", "s" or "l3". Throws on unknown labels.
  DivisorClass unit(const std::string& label) const;
  Eigen::Index index_of(const std::string& label) const;
  /// Integer combination of basis labels, e.g. cls({{"h", 1}, {"l1", -1}}).
  DivisorClass cls(std::initializer_list<std::pair<std::string, std::int64_t>> terms) const;
  DivisorClass zero() const { return DivisorClass::Zero(rank()); }
  /// Index of the basis vector equal to C (C is a basis vector in every family).
  Eigen::Index c_index() const;
  /// The exceptional class l_i (1-based).
  DivisorClass l(int i) const { return unit("l" + std::to_string(i)); }
  /// Human-readable form such as "h-l1-l2".
  std::string format(const DivisorClass& d) const;
};

/// Throws std::invalid_argument for an out-of-range family.
IntersectionLattice build_lattice(const SurfaceFamily& family);

/// D1^T gram D2. Throws std::invalid_argument on dimension mismatch.
std::int64_t pair(const IntersectionLattice& L, const DivisorClass& d1, const DivisorClass& d2);

/// Anticanonical degree D.(-K).
std::int64_t degree(const IntersectionLattice& L, const DivisorClass& d);

/// Structural checks used by the self-test: symmetry, unimodularity, Lorentzian signature and
/// the (C^2, C.K) values of the family. Returns an empty string when all hold.
std::string lattice_defect(const IntersectionLattice& L);

}  // namespace adecox
