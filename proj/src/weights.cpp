#include "adecox/weights.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace adecox {

void WeightMultiset::add(const WeightVector& w, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t WeightMultiset::multiplicity(const WeightVector& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : entries_) t += m;
  return t;
}

bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  auto ia = a.entries_.begin();
  for (auto ib = b.entries_.begin(); ib != b.entries_.end(); ++ia, ++ib)
    if (!same(ia->first, ib->first) || ia->second != ib->second) return false;
  return true;
}

WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) {
  for (const auto& [w, m] : b.entries_) a.add(w, m);
  return a;
}

WeightMultiset difference(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out = a;
  for (const auto& [w, m] : b.entries()) {
    if (out.multiplicity(w) < m) throw std::logic_error("difference: negative multiplicity");
    out.add(w, -m);
  }
  return out;
}

WeightVector weight_of(const RootSystemData& R, const DivisorClass& d) {
  WeightVector w(R.rank());
  for (Eigen::Index i = 0; i < R.rank(); ++i) w(i) = -pair(R.lattice, d, R.simple_roots[i]);
  return w;
}

Rational inner_product(const RootDatum& R, const WeightVector& mu, const WeightVector& nu) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < R.rank(); ++i)
    for (Eigen::Index j = 0; j < R.rank(); ++j) s += mu(i) * R.inverse_cartan(i, j) * nu(j);
  return s;
}

bool is_dominant(const WeightVector& w) { return w.size() == 0 || w.minCoeff() >= 0; }

WeightVector simple_reflection(const RootDatum& R, const WeightVector& w, Eigen::Index i) {
  return w - w(i) * R.cartan.col(i);
}

WeightVector dominant_conjugate(const RootDatum& R, WeightVector w) {
  for (;;) {
    Eigen::Index i = 0;
    for (; i < w.size(); ++i)
      if (w(i) < 0) break;
    if (i == w.size()) return w;
    w -= w(i) * R.cartan.col(i);
  }
}

std::vector<WeightVector> weight_orbit(const RootDatum& R, const WeightVector& w) {
  std::set<WeightVector, LexLess> seen{w};
  std::deque<WeightVector> queue{w};
  while (!queue.empty()) {
    const WeightVector x = queue.front();
    queue.pop_front();
    for (Eigen::Index i = 0; i < R.rank(); ++i) {
      if (x(i) == 0) continue;
      WeightVector y = simple_reflection(R, x, i);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

BigInt weyl_dim(const RootDatum& R, const WeightVector& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  // <mu, alpha> = sum_j c_j mu_j for alpha = sum_j c_j alpha_j, since <omega_i, alpha_j> = delta_ij.
  Rational dim = 1;
  for (const auto& c : R.positive_roots) {
    std::int64_t num = 0, den = 0;
    for (Eigen::Index j = 0; j < R.rank(); ++j) {
      num += c(j) * (lambda(j) + 1);
      den += c(j);
    }
    dim *= Rational(num, den);
  }
  if (denominator(dim) != 1) throw std::logic_error("weyl_dim: non-integral dimension");
  return numerator(dim);
}

namespace {

// Integer multiple of the inverse Cartan matrix: scale * C^{-1}.
struct ScaledForm {
  std::int64_t scale = 1;
  IntMatrix form;

  explicit ScaledForm(const RootDatum& R) {
    BigInt l = 1;
    for (Eigen::Index i = 0; i < R.rank(); ++i)
      for (Eigen::Index j = 0; j < R.rank(); ++j) l = lcm(l, BigInt(denominator(R.inverse_cartan(i, j))));
    scale = static_cast<std::int64_t>(l);
    form.resize(R.rank(), R.rank());
    for (Eigen::Index i = 0; i < R.rank(); ++i)
      for (Eigen::Index j = 0; j < R.rank(); ++j)
        form(i, j) = static_cast<std::int64_t>(numerator(R.inverse_cartan(i, j) * scale));
  }
  std::int64_t operator()(const WeightVector& a, const WeightVector& b) const { return a.dot(form * b); }
};

// lambda - nu as a nonnegative integer combination of simple roots, or false.
bool below(const ScaledForm& sf, const WeightVector& lambda, const WeightVector& nu, std::int64_t* height) {
  const IntVector scaled = sf.form * (lambda - nu);
  std::int64_t h = 0;
  for (Eigen::Index i = 0; i < scaled.size(); ++i) {
    if (scaled(i) < 0 || scaled(i) % sf.scale != 0) return false;
    h += scaled(i) / sf.scale;
  }
  if (height) *height = h;
  return true;
}

}  // namespace

std::map<WeightVector, std::int64_t, LexLess> dominant_character(const RootDatum& R, const WeightVector& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("freudenthal: weight is not dominant");
  const ScaledForm ip(R);

  // Dominant weights of V_lambda: dominant nu with lambda - nu in Q+. Every such weight is
  // reached from a higher dominant weight by subtracting a root and conjugating.
  std::vector<WeightVector> roots_labels;
  for (const auto& c : R.positive_roots) {
    const WeightVector a = R.root_labels(c);
    roots_labels.push_back(a);
    roots_labels.push_back(-a);
  }
  std::map<WeightVector, std::int64_t, LexLess> height;  // height of lambda - nu
  std::deque<WeightVector> queue{lambda};
  height[lambda] = 0;
  while (!queue.empty()) {
    const WeightVector mu = queue.front();
    queue.pop_front();
    for (const auto& a : roots_labels) {
      WeightVector nu = dominant_conjugate(R, mu - a);
      if (height.count(nu)) continue;
      std::int64_t h = 0;
      if (!below(ip, lambda, nu, &h)) continue;
      height.emplace(nu, h);
      queue.push_back(std::move(nu));
    }
  }

  std::vector<WeightVector> order;
  for (const auto& [w, h] : height) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [&](const WeightVector& a, const WeightVector& b) { return height.at(a) < height.at(b); });

  const WeightVector rho = WeightVector::Ones(R.rank());
  const std::int64_t top = ip(lambda + rho, lambda + rho);
  std::map<WeightVector, std::int64_t, LexLess> mult;
  mult[lambda] = 1;
  for (const auto& mu : order) {
    if (same(mu, lambda)) continue;
    std::int64_t num = 0;
    for (const auto& c : R.positive_roots) {
      const WeightVector a = R.root_labels(c);
      WeightVector w = mu + a;
      for (;;) {
        const auto it = mult.find(dominant_conjugate(R, w));
        if (it == mult.end()) break;  // alpha-strings are unbroken
        std::int64_t pairing = 0;     // <w, alpha>
        for (Eigen::Index j = 0; j < R.rank(); ++j) pairing += c(j) * w(j);
        num += it->second * pairing;
        w += a;
      }
    }
    num *= 2 * ip.scale;
    const std::int64_t den = top - ip(mu + rho, mu + rho);
    if (den <= 0 || num % den != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    mult[mu] = num / den;
  }
  return mult;
}

WeightMultiset freudenthal(const RootDatum& R, const WeightVector& lambda) {
  WeightMultiset out;
  for (const auto& [mu, m] : dominant_character(R, lambda)) {
    if (m == 0) continue;
    for (const auto& w : weight_orbit(R, mu)) out.add(w, m);
  }
  return out;
}

WeightMultiset line_weight_multiset(const RootSystemData& R, const ClassSet& lines) {
  WeightMultiset m = weights_of(R, lines.classes);
  if (R.lattice.family == SurfaceFamily{Kind::E, 8}) m.add(WeightVector::Zero(R.rank()), 8);
  return m;
}

WeightMultiset line_weight_multiset(const RootSystemData& R) {
  return line_weight_multiset(R, enumerate_lines(R.lattice));
}

WeightMultiset sym2_multiset(const WeightMultiset& m) {
  WeightMultiset out;
  const auto& e = m.entries();
  for (auto i = e.begin(); i != e.end(); ++i) {
    out.add(2 * i->first, i->second * (i->second + 1) / 2);
    for (auto j = std::next(i); j != e.end(); ++j) out.add(i->first + j->first, i->second * j->second);
  }
  return out;
}

bool is_weyl_invariant(const RootDatum& R, const WeightMultiset& m) {
  for (Eigen::Index i = 0; i < R.rank(); ++i)
    for (const auto& [w, mult] : m.entries())
      if (m.multiplicity(simple_reflection(R, w, i)) != mult) return false;
  return true;
}

Sym2Decomposition decompose_sym2(const RootSystemData& R) {
  const IntersectionLattice& L = R.lattice;
  Sym2Decomposition d;
  d.sym2 = sym2_multiset(line_weight_multiset(R));
  d.v_part = freudenthal(R.datum, 2 * weight_of(R, highest_line_class(L)));
  d.w_part = difference(d.sym2, d.v_part);

  const WeightVector zero = WeightVector::Zero(R.rank());
  const int n = L.family.n;
  switch (L.family.kind) {
    case Kind::A:
      d.expected_description = "empty";
      break;
    case Kind::D:
      d.expected.add(zero, 1);
      d.expected_description = "zero x1 (trivial summand O(f))";
      break;
    case Kind::E: {
      d.expected = weights_of(R, enumerate_rulings(L).classes);
      if (n <= 6) {
        d.expected_description = "ruling weights";
      } else if (n == 7) {
        d.expected.add(zero, 7);
        d.expected_description = "ruling weights + zero x7 (adjoint)";
      } else {
        d.expected = freudenthal(R.datum, weight_of(R, L.cls({{"h", 1}, {"l1", -1}})));
        d.expected.add(zero, 1);
        d.expected_description = "V(h-l1) + zero x1";
      }
      break;
    }
  }
  d.matches = d.w_part == d.expected;
  return d;
}

WeightLemmaReport verify_weight_lemma(const RootSystemData& R) {
  const IntersectionLattice& L = R.lattice;
  WeightLemmaReport rep;
  const WeightMultiset line_module = freudenthal(R.datum, weight_of(R, highest_line_class(L)));
  rep.line_module_dim = line_module.total();
  rep.lines_match = line_module == line_weight_multiset(R);
  if (L.family.kind != Kind::E) return rep;

  rep.rulings_checked = true;
  const auto rulings = enumerate_rulings(L);
  rep.ruling_count = static_cast<std::int64_t>(rulings.size());
  const WeightMultiset ruling_weights = weights_of(R, rulings.classes);
  const WeightMultiset module = freudenthal(R.datum, weight_of(R, L.cls({{"h", 1}, {"l1", -1}})));
  rep.ruling_module_dim = module.total();
  const WeightVector zero = WeightVector::Zero(R.rank());
  if (L.family.n <= 6) {
    rep.rulings_relation = "equal";
    rep.rulings_match = module == ruling_weights;
  } else if (L.family.n == 7) {
    rep.rulings_relation = "equal plus zero x7";
    WeightMultiset expected = ruling_weights;
    expected.add(zero, 7);
    rep.rulings_match = module == expected;
  } else {
    rep.rulings_relation = "strict containment";
    bool contained = true;
    for (const auto& [w, m] : ruling_weights.entries())
      contained = contained && m == 1 && module.multiplicity(w) == 1;
    rep.rulings_match = contained && module.total() > ruling_weights.total();
  }
  return rep;
}

}  // namespace adecox
