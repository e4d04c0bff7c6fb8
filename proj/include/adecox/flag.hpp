#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adecox/cox.hpp"

namespace adecox {

struct QuadricVariable {
  std::string name;
  DivisorClass cls;
  WeightVector weight;
};

/// Variable i maps to scalar * (Cox generator `target`).
struct Substitution {
  Rational scalar;
  int target = 0;
};

/// Quadrics in weight-vector coordinates, optionally with a substitution into a Cox ring.
struct QuadricSystem {
  std::vector<QuadricVariable> variables;
  std::vector<Polynomial> quadrics;
  std::vector<Substitution> substitution;  // empty, or one entry per variable
};

/// All monomials of each quadric share one Pic class and one weight.
bool is_homogeneous(const QuadricSystem& q);

/// The cone over the D_n spinor-free quadric: sum x_i y_i with x_i <-> l_i, y_i <-> f - l_i.
/// Throws std::invalid_argument unless the family is D with n >= 3.
QuadricSystem cone_quadric_D(const RootSystemData& R);

struct ConeEmbedding {
  QuadricSystem cone;                // cone quadric with X_i -> c_i x_i, Y_i -> y_i
  std::vector<Rational> coefficients;  // c_1, ..., c_n
  Polynomial image;                  // sum c_i x_i y_i in the Cox generators
  Eigen::Index rank_before = 0;      // rank of the Cox relations at class f
  Eigen::Index rank_after = 0;       // ... after adjoining the image
  bool certified = false;
};

/// Nonzero c with sum c_i = 0 and sum c_i t_i = 0. n = 3 gives the ray (t2-t3, t3-t1, t1-t2);
/// larger n takes the first small-integer solution, normalized to a positive leading entry.
std::vector<Rational> cone_coefficients(const SurfaceConfigD& cfg);

/// Realizes the surjection from the cone's coordinate ring onto Cox(S, D_n) and certifies that
/// the image of the cone quadric lies in the Cox ideal. Throws std::invalid_argument for bad points.
ConeEmbedding embed_cox_into_cone_D(const RootSystemData& R, const SurfaceConfigD& cfg);

struct AnReport {
  std::int64_t generators = 0;
  std::int64_t relations = 0;
  std::vector<std::int64_t> dims;           // graded dimension per total degree
  std::vector<std::int64_t> projective;     // binomial(d + n, n)
  bool weights_distinct = false;
  bool pass() const { return relations == 0 && dims == projective && weights_distinct; }
};

/// Proj Cox(S, A_n) = P^n, compared degree by degree up to max_degree.
AnReport an_report(const RootSystemData& R, int max_degree);

struct AppendixReport {
  std::string family;
  std::vector<DivisorClass> left, right;  // classes of the two tensor factors
  std::size_t products = 0;
  bool classes_match = false;  // pairwise sums are exactly the lines
  bool weights_match = false;  // product multiset equals the line weight multiset
  std::optional<QuadricSystem> segre;  // D2 only
  bool segre_homogeneous = true;
  bool pass() const { return classes_match && weights_match && segre_homogeneous; }
};

/// Tensor factorization of the line module for E3 = A2 x A1 and D2 = A1 x A1.
AppendixReport appendix_tensor_check(const RootSystemData& R);

}  // namespace adecox
