#include "adecox/cox.hpp"

#include <set>
#include <stdexcept>

#include "adecox/exact_linalg.hpp"

namespace adecox {

void validate_points(const SurfaceConfigD& cfg, int n) {
  if (static_cast<int>(cfg.points.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " points, got " +
                                std::to_string(cfg.points.size()));
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
      if (cfg.points[i] == cfg.points[j])
        throw std::invalid_argument("repeated point " + to_string(cfg.points[i]) +
                                    ": points must be in general position");
}

DivisorClass CoxPresentation::class_of(const Monomial& m) const {
  DivisorClass d = lattice.zero();
  for (int g : m) d += generators[static_cast<std::size_t>(g)].cls;
  return d;
}

std::vector<Generator> cox_generators(const IntersectionLattice& L) {
  std::vector<Generator> gens;
  const int n = L.family.n;
  switch (L.family.kind) {
    case Kind::A:
      for (int i = 1; i <= n + 1; ++i) gens.push_back({"x" + std::to_string(i), L.l(i)});
      break;
    case Kind::D:
      for (int i = 1; i <= n; ++i) {
        gens.push_back({"x" + std::to_string(i), L.l(i)});
        gens.push_back({"y" + std::to_string(i), L.unit("f") - L.l(i)});
      }
      break;
    case Kind::E: {
      const auto lines = enumerate_lines(L);
      for (std::size_t i = 0; i < lines.size(); ++i) gens.push_back({"e" + std::to_string(i + 1), lines.classes[i]});
      if (n == 8) {
        gens.push_back({"k1", L.C - L.K});
        gens.push_back({"k2", L.C - L.K});
      }
      break;
    }
  }
  return gens;
}

CoxPresentation cox_presentation(const IntersectionLattice& L) { return CoxPresentation{L, cox_generators(L), {}}; }

CoxPresentation cox_presentation(const IntersectionLattice& L, const SurfaceConfigD& cfg) {
  if (L.family.kind != Kind::D) return cox_presentation(L);
  return dn_ideal(L, cfg);
}

CoxPresentation dn_ideal(const IntersectionLattice& L, const SurfaceConfigD& cfg) {
  if (L.family.kind != Kind::D) throw std::invalid_argument("dn_ideal: lattice is not of D type");
  const int n = L.family.n;
  CoxPresentation P = cox_presentation(L);
  if (n < 3 && cfg.points.empty()) return P;
  validate_points(cfg, n);
  const auto& t = cfg.points;
  // x_i y_i is the section u - t_i v of the fiber pencil; three of them are dependent.
  auto xy = [](int i) { return Monomial{2 * (i - 1), 2 * (i - 1) + 1}; };
  for (int i = 3; i <= n; ++i) {
    const Rational& ti = t[static_cast<std::size_t>(i - 1)];
    Relation r;
    r.cls = L.unit("f");
    r.terms = {{t[1] - ti, xy(1)}, {ti - t[0], xy(2)}, {t[0] - t[1], xy(i)}};
    P.relations.push_back(std::move(r));
  }
  return P;
}

std::int64_t section_dim(const IntersectionLattice& L, const DivisorClass& d) {
  if (pair(L, d, L.C) != 0) throw std::invalid_argument("section_dim: class is not orthogonal to C");
  switch (L.family.kind) {
    case Kind::A: {
      for (Eigen::Index i = 1; i < d.size(); ++i)
        if (d(i) < 0) return 0;
      return 1;
    }
    case Kind::D: {
      // D = a f + sum c_i l_i = a0 F + sum a_i l_i + sum b_j (f - l_j)
      std::int64_t a0 = d(0);
      for (Eigen::Index i = 2; i < d.size(); ++i)
        if (d(i) < 0) a0 += d(i);
      return a0 >= 0 ? a0 + 1 : 0;
    }
    case Kind::E: {
      if (d.isZero()) return 1;
      const auto sq = pair(L, d, d), dk = pair(L, d, L.K);
      const DivisorClass anti = L.C - L.K;
      const int n = L.family.n;
      const bool line = sq == -1 && dk == -1;
      const bool ruling = sq == 0 && dk == -2;
      const bool supported = line || ruling || ((n == 7 || n == 8) && same(d, anti)) || (n == 8 && same(d, 2 * anti));
      if (!supported) throw std::invalid_argument("section_dim: unsupported E-family class " + L.format(d));
      return 1 + (sq - dk) / 2;
    }
  }
  return 0;
}

namespace {

struct MonomialSearch {
  const CoxPresentation& P;
  std::size_t cap;
  std::size_t visited = 0;
  // Coordinate-wise min / max of generator classes over suffixes g.., for pruning.
  std::vector<IntVector> suffix_min, suffix_max;
  std::vector<Monomial>* out = nullptr;
  Monomial current;

  MonomialSearch(const CoxPresentation& p, std::size_t c) : P(p), cap(c) {
    const auto g = P.generators.size();
    suffix_min.resize(g + 1);
    suffix_max.resize(g + 1);
    for (std::size_t i = g; i-- > 0;) {
      const auto& cls = P.generators[i].cls;
      suffix_min[i] = i + 1 < g ? suffix_min[i + 1].cwiseMin(cls).eval() : cls;
      suffix_max[i] = i + 1 < g ? suffix_max[i + 1].cwiseMax(cls).eval() : cls;
    }
  }

  void run(std::size_t start, const DivisorClass& remaining, std::int64_t k) {
    if (++visited > cap * 64) throw std::length_error("monomial enumeration exceeded cap");
    if (k == 0) {
      if (remaining.isZero()) {
        out->push_back(current);
        if (out->size() > cap) throw std::length_error("monomial count exceeded cap");
      }
      return;
    }
    for (std::size_t g = start; g < P.generators.size(); ++g) {
      if ((remaining.array() < k * suffix_min[g].array()).any() ||
          (remaining.array() > k * suffix_max[g].array()).any())
        return;  // suffix ranges only shrink as g grows
      current.push_back(static_cast<int>(g));
      run(g, remaining - P.generators[g].cls, k - 1);
      current.pop_back();
    }
  }
};

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

template <typename Lookup>
Matrix<Rational> build_relation_matrix(const CoxPresentation& P, const DivisorClass& d,
                                       const std::vector<Monomial>& columns, Lookup&& lower) {
  std::map<Monomial, Eigen::Index> col_index;
  for (std::size_t i = 0; i < columns.size(); ++i) col_index.emplace(columns[i], static_cast<Eigen::Index>(i));
  std::vector<std::vector<std::pair<Eigen::Index, Rational>>> rows;
  for (const auto& rel : P.relations) {
    for (const auto& m : lower(d - rel.cls)) {
      std::vector<std::pair<Eigen::Index, Rational>> row;
      for (const auto& term : rel.terms) {
        const auto it = col_index.find(multiply(term.monomial, m));
        if (it == col_index.end()) throw std::logic_error("relation product left its graded piece");
        row.emplace_back(it->second, term.coeff);
      }
      rows.push_back(std::move(row));
    }
  }
  Matrix<Rational> mat = Matrix<Rational>::Zero(static_cast<Eigen::Index>(rows.size()),
                                                static_cast<Eigen::Index>(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) mat(static_cast<Eigen::Index>(r), c) += v;
  return mat;
}

}  // namespace

std::vector<Monomial> monomials_of_class(const CoxPresentation& P, const DivisorClass& d, std::size_t cap) {
  std::vector<Monomial> out;
  const auto k = degree(P.lattice, d);
  if (k < 0) return out;
  MonomialSearch search(P, cap);
  search.out = &out;
  search.run(0, d, k);
  std::sort(out.begin(), out.end());
  return out;
}

Matrix<Rational> relation_matrix(const CoxPresentation& P, const DivisorClass& d,
                                 const std::vector<Monomial>& columns, std::size_t cap) {
  return build_relation_matrix(P, d, columns,
                               [&](const DivisorClass& c) { return monomials_of_class(P, c, cap); });
}

std::int64_t graded_piece_dim(const CoxPresentation& P, const DivisorClass& d, std::size_t cap) {
  if (pair(P.lattice, d, P.lattice.C) != 0) throw std::invalid_argument("graded_piece_dim: class is not orthogonal to C");
  const auto columns = monomials_of_class(P, d, cap);
  if (columns.empty()) return 0;
  return static_cast<std::int64_t>(columns.size()) - rank(relation_matrix(P, d, columns, cap));
}

std::size_t HilbertReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const HilbertCheck& c) { return !c.ok(); }));
}

HilbertReport verify_hilbert(const CoxPresentation& P, int max_degree) {
  // Bucket every monomial of degree <= max_degree by class, once.
  using Buckets = std::map<DivisorClass, std::vector<Monomial>, LexLess>;
  std::vector<Buckets> by_degree(static_cast<std::size_t>(std::max(0, max_degree)) + 1);
  by_degree[0][P.lattice.zero()].push_back({});
  for (int k = 1; k <= max_degree; ++k) {
    for (const auto& [cls, monos] : by_degree[static_cast<std::size_t>(k - 1)])
      for (const auto& m : monos) {
        const int start = m.empty() ? 0 : m.back();
        for (int g = start; g < static_cast<int>(P.generators.size()); ++g) {
          Monomial next = m;
          next.push_back(g);
          by_degree[static_cast<std::size_t>(k)][cls + P.generators[static_cast<std::size_t>(g)].cls].push_back(std::move(next));
        }
      }
  }
  static const std::vector<Monomial> none;
  HilbertReport rep;
  for (int k = 0; k <= max_degree; ++k) {
    for (const auto& [cls, monos] : by_degree[static_cast<std::size_t>(k)]) {
      auto lower = [&](const DivisorClass& c) -> const std::vector<Monomial>& {
        const auto kk = degree(P.lattice, c);
        if (kk < 0 || kk > max_degree) return none;
        const auto& b = by_degree[static_cast<std::size_t>(kk)];
        const auto it = b.find(c);
        return it == b.end() ? none : it->second;
      };
      HilbertCheck c;
      c.cls = cls;
      c.degree = k;
      c.graded = static_cast<std::int64_t>(monos.size()) - rank(build_relation_matrix(P, cls, monos, lower));
      c.sections = section_dim(P.lattice, cls);
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

std::vector<DivisorClass> census_targets(const IntersectionLattice& L) {
  std::vector<DivisorClass> targets = enumerate_rulings(L).classes;
  const DivisorClass anti = L.C - L.K;
  if (L.family == SurfaceFamily{Kind::E, 7}) targets.push_back(anti);
  if (L.family == SurfaceFamily{Kind::E, 8}) targets.push_back(2 * anti);
  return targets;
}

RelationCensus relation_census(const IntersectionLattice& L, const DivisorClass& target, const ClassSet& lines) {
  const DivisorClass anti = L.C - L.K;
  const bool ruling = pair(L, target, target) == 0 && pair(L, target, L.K) == -2 && pair(L, target, L.C) == 0;
  const bool e7_anti = L.family == SurfaceFamily{Kind::E, 7} && same(target, anti);
  const bool e8_anti2 = L.family == SurfaceFamily{Kind::E, 8} && same(target, 2 * anti);
  if (!ruling && !e7_anti && !e8_anti2)
    throw std::invalid_argument("relation_census: unsupported target " + L.format(target));
  RelationCensus c;
  c.target = target;
  c.monomials = pairs_of_lines_summing_to(L, target, lines);
  if (e8_anti2) c.monomials += 3;  // k1^2, k1 k2, k2^2
  c.sections = section_dim(L, target);
  c.relations = c.monomials - c.sections;
  if (c.relations < 0) throw std::logic_error("relation_census: more sections than monomials");
  return c;
}

RelationCensus relation_census(const IntersectionLattice& L, const DivisorClass& target) {
  return relation_census(L, target, enumerate_lines(L));
}

TorusCharacter torus_character(const RootSystemData& R, const DivisorClass& d) {
  TorusCharacter t;
  t.tsg = d;
  t.tsg(R.lattice.c_index()) = 0;
  t.tg = weight_of(R, d);
  return t;
}

namespace {

void check_linearization(const IntersectionLattice& L, const DivisorClass& lin) {
  bool ok = false;
  if (L.family.kind == Kind::D) ok = same(lin, L.unit("f"));
  if (L.family.kind == Kind::A)
    for (int i = 1; i <= L.family.n + 1; ++i) ok = ok || same(lin, L.l(i));
  if (!ok) throw std::invalid_argument("git_hilbert: unsupported linearization " + L.format(lin));
}

}  // namespace

std::vector<std::int64_t> git_hilbert(const IntersectionLattice& L, const DivisorClass& lin, int max_k) {
  check_linearization(L, lin);
  std::vector<std::int64_t> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(section_dim(L, k * lin));
  return out;
}

std::vector<std::int64_t> git_hilbert(const CoxPresentation& P, const DivisorClass& lin, int max_k) {
  check_linearization(P.lattice, lin);
  std::vector<std::int64_t> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(graded_piece_dim(P, k * lin));
  return out;
}

bool is_pic_homogeneous(const CoxPresentation& P) {
  for (const auto& r : P.relations)
    for (const auto& t : r.terms)
      if (!same(P.class_of(t.monomial), r.cls)) return false;
  return true;
}

bool is_torus_homogeneous(const RootSystemData& R, const CoxPresentation& P) {
  for (const auto& r : P.relations) {
    if (r.terms.empty()) continue;
    const auto first = torus_character(R, P.class_of(r.terms.front().monomial));
    for (const auto& t : r.terms) {
      const auto ch = torus_character(R, P.class_of(t.monomial));
      if (!same(ch.tsg, first.tsg) || !same(ch.tg, first.tg)) return false;
    }
  }
  return true;
}

}  // namespace adecox
