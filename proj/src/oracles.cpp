#include "adecox/oracles.hpp"

namespace adecox::oracle {

std::vector<DivisorClass> naive_class_search(const IntersectionLattice& L, std::int64_t square,
                                             std::int64_t canonical, std::int64_t radius) {
  std::vector<DivisorClass> out;
  const Eigen::Index r = L.rank();
  DivisorClass d = DivisorClass::Constant(r, -radius);
  for (;;) {
    if (d.dot(L.gram * d) == square && d.dot(L.gram * L.K) == canonical && d.dot(L.gram * L.C) == 0)
      out.push_back(d);
    Eigen::Index i = 0;
    while (i < r && d(i) == radius) d(i++) = -radius;
    if (i == r) break;
    ++d(i);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

namespace {

// Euclidean epsilon vectors turned into labels against a list of simple roots.
WeightVector labels(const std::vector<IntVector>& simple, const IntVector& eps) {
  WeightVector w(static_cast<Eigen::Index>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i) w(static_cast<Eigen::Index>(i)) = simple[i].dot(eps);
  return w;
}

WeightMultiset sym2_of(const std::vector<IntVector>& simple, const std::vector<IntVector>& basis_weights) {
  WeightMultiset m;
  for (std::size_t j = 0; j < basis_weights.size(); ++j)
    for (std::size_t k = j; k < basis_weights.size(); ++k) m.add(labels(simple, basis_weights[j] + basis_weights[k]));
  return m;
}

std::vector<IntVector> so6_simple() {
  return {int_vector({1, -1, 0}), int_vector({0, 1, -1}), int_vector({0, 1, 1})};
}

}  // namespace

WeightMultiset sym2_defining_sl(int n) {
  const int dim = n + 1;
  std::vector<IntVector> simple, basis;
  for (int i = 0; i < n; ++i) {
    IntVector a = IntVector::Zero(dim);
    a(i + 1) = 1;
    a(i) = -1;
    simple.push_back(a);
  }
  for (int j = 0; j < dim; ++j) basis.push_back(IntVector::Unit(dim, j));
  return sym2_of(simple, basis);
}

WeightMultiset sym2_defining_so6() {
  std::vector<IntVector> basis;
  for (int k = 0; k < 3; ++k) {
    basis.push_back(IntVector::Unit(3, k));
    basis.push_back(-IntVector::Unit(3, k));
  }
  return sym2_of(so6_simple(), basis);
}

IntMatrix so6_cartan() {
  const auto s = so6_simple();
  IntMatrix c(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = s[static_cast<std::size_t>(i)].dot(s[static_cast<std::size_t>(j)]);
  return c;
}

WeightVector so6_vector_highest_weight() { return labels(so6_simple(), IntVector::Unit(3, 0)); }

}  // namespace adecox::oracle
