#include "adecox/roots.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "adecox/exact_linalg.hpp"

namespace adecox {

RootDatum root_datum_from_cartan(const IntMatrix& cartan) {
  classify_type(cartan);  // the closure below only terminates for finite type
  const Eigen::Index n = cartan.rows();
  std::set<IntVector, LexLess> seen;
  std::deque<IntVector> queue;
  for (Eigen::Index i = 0; i < n; ++i) {
    IntVector e = IntVector::Unit(n, i);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector b = queue.front();
    queue.pop_front();
    const IntVector labels = cartan * b;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (labels(i) != -1) continue;
      IntVector next = b;
      next(i) += 1;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  RootDatum d;
  d.cartan = cartan;
  d.inverse_cartan = inverse(cartan.cast<Rational>());
  d.positive_roots.assign(seen.begin(), seen.end());
  std::stable_sort(d.positive_roots.begin(), d.positive_roots.end(), [](const IntVector& a, const IntVector& b) {
    return a.sum() < b.sum();
  });
  return d;
}

std::string DynkinType::label() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += "×";
    out += c.kind + std::to_string(c.rank);
  }
  return out.empty() ? "trivial" : out;
}

std::int64_t DynkinType::expected_determinant() const {
  std::int64_t det = 1;
  for (const auto& c : components) {
    switch (c.kind) {
      case 'A': det *= c.rank + 1; break;
      case 'D': det *= 4; break;
      case 'E': det *= 9 - c.rank; break;
      default: break;
    }
  }
  return det;
}

DynkinType classify_type(const IntMatrix& cartan) {
  const Eigen::Index n = cartan.rows();
  std::vector<std::vector<Eigen::Index>> adj(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw std::logic_error("classify_type: diagonal entry is not 2");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan(i, j) != cartan(j, i)) throw std::logic_error("classify_type: Cartan matrix not symmetric");
      if (cartan(i, j) == -1) adj[i].push_back(j);
      else if (cartan(i, j) != 0) throw std::logic_error("classify_type: off-diagonal entry not in {0,-1}");
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  DynkinType type;
  for (Eigen::Index start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<Eigen::Index> nodes{start};
    comp[start] = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (auto j : adj[nodes[k]])
        if (comp[j] < 0) {
          comp[j] = 1;
          nodes.push_back(j);
        }
    std::size_t edges = 0;
    std::vector<Eigen::Index> branch;
    for (auto v : nodes) {
      edges += adj[v].size();
      if (adj[v].size() > 3) throw std::logic_error("classify_type: node of degree > 3");
      if (adj[v].size() == 3) branch.push_back(v);
    }
    edges /= 2;
    const int size = static_cast<int>(nodes.size());
    if (edges != nodes.size() - 1) throw std::logic_error("classify_type: diagram has a cycle");
    if (branch.empty()) {
      type.components.push_back({'A', size});
      continue;
    }
    if (branch.size() > 1) throw std::logic_error("classify_type: more than one branch node");
    // Arm lengths from the branch node.
    std::vector<int> arms;
    for (auto first : adj[branch[0]]) {
      int len = 1;
      Eigen::Index prev = branch[0], cur = first;
      while (adj[cur].size() == 2) {
        const Eigen::Index next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) type.components.push_back({'D', size});
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) type.components.push_back({'E', size});
    else throw std::logic_error("classify_type: diagram is not of ADE type");
  }
  std::stable_sort(type.components.begin(), type.components.end(),
                   [](const DynkinComponent& a, const DynkinComponent& b) {
                     if (a.rank != b.rank) return a.rank > b.rank;
                     return a.kind < b.kind;
                   });
  return type;
}

std::vector<DivisorClass> simple_roots(const IntersectionLattice& L) {
  const int n = L.family.n;
  std::vector<DivisorClass> out;
  switch (L.family.kind) {
    case Kind::E:
      out.push_back(L.cls({{"h", -1}, {"l1", 1}, {"l2", 1}, {"l3", 1}}));
      for (int i = 2; i <= n; ++i) out.push_back(L.l(i) - L.l(i - 1));
      break;
    case Kind::D:
      out.push_back(L.cls({{"f", -1}, {"l1", 1}, {"l2", 1}}));
      for (int i = 2; i <= n; ++i) out.push_back(L.l(i) - L.l(i - 1));
      break;
    case Kind::A:
      for (int i = 1; i <= n; ++i) out.push_back(L.l(i + 1) - L.l(i));
      break;
  }
  return out;
}

RootSystemData build_root_system(const IntersectionLattice& L) {
  RootSystemData R;
  R.lattice = L;
  R.simple_roots = simple_roots(L);
  const auto n = static_cast<Eigen::Index>(R.simple_roots.size());
  R.cartan.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) R.cartan(i, j) = -pair(L, R.simple_roots[i], R.simple_roots[j]);
  R.datum = root_datum_from_cartan(R.cartan);
  for (const auto& c : R.datum.positive_roots) {
    DivisorClass d = L.zero();
    for (Eigen::Index i = 0; i < n; ++i) d += c(i) * R.simple_roots[i];
    R.positive_roots.push_back(std::move(d));
  }
  R.type = classify_type(R.cartan);
  return R;
}

DivisorClass reflect(const IntersectionLattice& L, const DivisorClass& x, const DivisorClass& alpha) {
  if (pair(L, alpha, alpha) != -2) throw std::invalid_argument("reflect: class is not a root (a^2 != -2)");
  return x + pair(L, x, alpha) * alpha;
}

std::vector<DivisorClass> weyl_orbit(const RootSystemData& R, const DivisorClass& seed) {
  std::set<DivisorClass, LexLess> seen{seed};
  std::deque<DivisorClass> queue{seed};
  while (!queue.empty()) {
    const DivisorClass x = queue.front();
    queue.pop_front();
    for (const auto& a : R.simple_roots) {
      DivisorClass y = x + pair(R.lattice, x, a) * a;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

DivisorClass highest_line_class(const IntersectionLattice& L) {
  return L.family.kind == Kind::A ? L.l(L.family.n + 1) : L.l(L.family.n);
}

}  // namespace adecox
