#pragma once

#include <map>
#include <string>
#include <vector>

#include "adecox/curves.hpp"
#include "adecox/roots.hpp"

namespace adecox {

/// Finite multiset of weights; the character of a representation.
class WeightMultiset {
 public:
  using Map = std::map<WeightVector, std::int64_t, LexLess>;

  void add(const WeightVector& w, std::int64_t multiplicity = 1);
  std::int64_t multiplicity(const WeightVector& w) const;
  std::int64_t total() const;
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b);
  friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b);

 private:
  Map entries_;
};

/// Pointwise a - b. Throws std::logic_error if any multiplicity would turn negative.
WeightMultiset difference(const WeightMultiset& a, const WeightMultiset& b);

/// Dynkin labels (-D.alpha_i)_i. Classes in span(C, K) map to zero.
WeightVector weight_of(const RootSystemData& R, const DivisorClass& d);

/// <mu, nu> = mu^T C^{-1} nu with roots of norm 2.
Rational inner_product(const RootDatum& R, const WeightVector& mu, const WeightVector& nu);

bool is_dominant(const WeightVector& w);
WeightVector dominant_conjugate(const RootDatum& R, WeightVector w);
WeightVector simple_reflection(const RootDatum& R, const WeightVector& w, Eigen::Index i);
/// Weyl orbit of a weight, sorted.
std::vector<WeightVector> weight_orbit(const RootDatum& R, const WeightVector& w);

/// Weyl dimension formula. Throws std::invalid_argument for a non-dominant weight.
BigInt weyl_dim(const RootDatum& R, const WeightVector& lambda);

/// Multiplicities of the dominant weights of V_lambda by Freudenthal's recursion.
std::map<WeightVector, std::int64_t, LexLess> dominant_character(const RootDatum& R, const WeightVector& lambda);

/// Full character of V_lambda: dominant multiplicities spread over Weyl orbits.
WeightMultiset freudenthal(const RootDatum& R, const WeightVector& lambda);

/// Weights of the line bundle L_G: one per line, plus the zero weight eight times for E8.
WeightMultiset line_weight_multiset(const RootSystemData& R, const ClassSet& lines);
WeightMultiset line_weight_multiset(const RootSystemData& R);

/// Character of Sym^2 given the character of the module.
WeightMultiset sym2_multiset(const WeightMultiset& m);

/// Every simple reflection maps the support to itself with equal multiplicities.
bool is_weyl_invariant(const RootDatum& R, const WeightMultiset& m);

inline WeightMultiset weights_of(const RootSystemData& R, const std::vector<DivisorClass>& classes) {
  WeightMultiset m;
  for (const auto& d : classes) m.add(weight_of(R, d));
  return m;
}

struct Sym2Decomposition {
  WeightMultiset sym2;
  WeightMultiset v_part;    // character of V_{2 l_n}
  WeightMultiset w_part;    // remainder
  WeightMultiset expected;  // remainder predicted for the family
  std::string expected_description;
  bool matches = false;
};

/// Sym^2 L_G = W + V_{2 l_n} as an exact multiset identity.
Sym2Decomposition decompose_sym2(const RootSystemData& R);

struct WeightLemmaReport {
  bool lines_match = false;             // Pi(l_n) = line weights (with zero x8 for E8)
  std::int64_t line_module_dim = 0;
  bool rulings_checked = false;         // E-family only
  std::string rulings_relation;         // "equal", "equal plus zero x7", "strict containment"
  bool rulings_match = false;
  std::int64_t ruling_count = 0;
  std::int64_t ruling_module_dim = 0;
  bool pass() const { return lines_match && (!rulings_checked || rulings_match); }
};

WeightLemmaReport verify_weight_lemma(const RootSystemData& R);

}  // namespace adecox
