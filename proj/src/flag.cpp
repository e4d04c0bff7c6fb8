#include "adecox/flag.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "adecox/exact_linalg.hpp"

namespace adecox {

bool is_homogeneous(const QuadricSystem& q) {
  auto class_of = [&](const Monomial& m) {
    DivisorClass d = q.variables.front().cls * 0;
    for (int v : m) d += q.variables[static_cast<std::size_t>(v)].cls;
    return d;
  };
  auto weight_of_monomial = [&](const Monomial& m) {
    WeightVector w = q.variables.front().weight * 0;
    for (int v : m) w += q.variables[static_cast<std::size_t>(v)].weight;
    return w;
  };
  for (const auto& poly : q.quadrics) {
    if (poly.empty()) continue;
    const auto cls = class_of(poly.front().monomial);
    const auto w = weight_of_monomial(poly.front().monomial);
    for (const auto& t : poly)
      if (!same(class_of(t.monomial), cls) || !same(weight_of_monomial(t.monomial), w)) return false;
  }
  return true;
}

namespace {

void require_d(const IntersectionLattice& L, int min_n) {
  if (L.family.kind != Kind::D || L.family.n < min_n)
    throw std::invalid_argument("expected a D-family lattice with n >= " + std::to_string(min_n) + ", got " +
                                L.family.label());
}

std::vector<QuadricVariable> line_variables(const RootSystemData& R) {
  std::vector<QuadricVariable> vars;
  for (const auto& g : cox_generators(R.lattice)) vars.push_back({g.name, g.cls, weight_of(R, g.cls)});
  return vars;
}

bool solves(const std::vector<Rational>& c, const std::vector<Rational>& t) {
  Rational s = 0, st = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) return false;
    s += c[i];
    st += c[i] * t[i];
  }
  return s == 0 && st == 0;
}

}  // namespace

QuadricSystem cone_quadric_D(const RootSystemData& R) {
  require_d(R.lattice, 3);
  QuadricSystem q;
  q.variables = line_variables(R);
  for (auto& v : q.variables) v.name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(v.name[0])));
  Polynomial quad;
  for (int i = 0; i < R.lattice.family.n; ++i) quad.push_back({Rational(1), {2 * i, 2 * i + 1}});
  q.quadrics.push_back(std::move(quad));
  return q;
}

std::vector<Rational> cone_coefficients(const SurfaceConfigD& cfg) {
  const auto& t = cfg.points;
  const std::size_t n = t.size();
  if (n < 3) throw std::invalid_argument("cone_coefficients: need at least 3 points");
  if (n == 3) return {t[1] - t[2], t[2] - t[0], t[0] - t[1]};

  // Small-integer search, entries ordered 1, -1, 2, -2 and leading entry positive.
  if (n <= 8) {
    const std::int64_t order[] = {1, -1, 2, -2};
    for (int bound : {2, 4}) {
      std::vector<Rational> c(n);
      std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == n) return solves(c, t);
        for (int k = 0; k < bound; ++k) {
          if (i == 0 && order[k] < 0) continue;
          c[i] = order[k];
          if (search(i + 1)) return true;
        }
        return false;
      };
      if (search(0)) return c;
    }
  }
  // Combination of the Cox relations: coordinates i >= 3 are b_i (t1 - t2) and the first two are
  // linear in the last weight with nonzero slope, so one of three choices avoids zeros.
  for (std::int64_t s = 1; s <= 3; ++s) {
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t i = 2; i < n; ++i) {
      const Rational b = i + 1 == n ? Rational(s) : Rational(1);
      c[0] += b * (t[1] - t[i]);
      c[1] += b * (t[i] - t[0]);
      c[i] = b * (t[0] - t[1]);
    }
    if (solves(c, t)) return c;
  }
  throw std::logic_error("cone_coefficients: no all-nonzero solution");
}

ConeEmbedding embed_cox_into_cone_D(const RootSystemData& R, const SurfaceConfigD& cfg) {
  const IntersectionLattice& L = R.lattice;
  require_d(L, 3);
  validate_points(cfg, L.family.n);
  const CoxPresentation P = dn_ideal(L, cfg);

  ConeEmbedding e;
  e.cone = cone_quadric_D(R);
  e.coefficients = cone_coefficients(cfg);
  for (int i = 0; i < L.family.n; ++i) {
    e.cone.substitution.push_back({e.coefficients[static_cast<std::size_t>(i)], 2 * i});
    e.cone.substitution.push_back({Rational(1), 2 * i + 1});
  }
  for (const auto& term : e.cone.quadrics.front()) {
    Rational coeff = term.coeff;
    Monomial m;
    for (int v : term.monomial) {
      coeff *= e.cone.substitution[static_cast<std::size_t>(v)].scalar;
      m.push_back(e.cone.substitution[static_cast<std::size_t>(v)].target);
    }
    std::sort(m.begin(), m.end());
    e.image.push_back({coeff, m});
  }

  const DivisorClass f = L.unit("f");
  const auto columns = monomials_of_class(P, f);
  const Matrix<Rational> before = relation_matrix(P, f, columns);
  Matrix<Rational> after(before.rows() + 1, before.cols());
  after.topRows(before.rows()) = before;
  after.row(before.rows()).setZero();
  for (const auto& term : e.image) {
    const auto it = std::find(columns.begin(), columns.end(), term.monomial);
    if (it == columns.end()) throw std::logic_error("embed_cox_into_cone_D: image left class f");
    after(before.rows(), it - columns.begin()) += term.coeff;
  }
  e.rank_before = rank(before);
  e.rank_after = rank(after);
  e.certified = e.rank_before == e.rank_after;
  return e;
}

AnReport an_report(const RootSystemData& R, int max_degree) {
  const IntersectionLattice& L = R.lattice;
  if (L.family.kind != Kind::A) throw std::invalid_argument("an_report: expected an A-family lattice");
  const CoxPresentation P = cox_presentation(L);
  AnReport rep;
  rep.generators = static_cast<std::int64_t>(P.generators.size());
  rep.relations = static_cast<std::int64_t>(P.relations.size());
  const int vars = L.family.n + 1;
  for (int d = 0; d <= max_degree; ++d) {
    // Classes of degree d: exponent vectors with sum d.
    std::int64_t total = 0;
    std::vector<std::int64_t> a(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> walk = [&](int i, int left) {
      if (i == vars - 1) {
        a[static_cast<std::size_t>(i)] = left;
        DivisorClass d_cls = L.zero();
        for (int j = 0; j < vars; ++j) d_cls += a[static_cast<std::size_t>(j)] * L.l(j + 1);
        total += graded_piece_dim(P, d_cls);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        a[static_cast<std::size_t>(i)] = x;
        walk(i + 1, left - x);
      }
    };
    walk(0, d);
    rep.dims.push_back(total);
    BigInt binom = 1;
    for (int j = 1; j <= L.family.n; ++j) binom = binom * (d + j) / j;
    rep.projective.push_back(static_cast<std::int64_t>(binom));
  }
  std::vector<WeightVector> ws;
  for (const auto& g : P.generators) ws.push_back(weight_of(R, g.cls));
  const std::size_t before = ws.size();
  sort_unique(ws);
  rep.weights_distinct = ws.size() == before;
  return rep;
}

AppendixReport appendix_tensor_check(const RootSystemData& R) {
  const IntersectionLattice& L = R.lattice;
  AppendixReport rep;
  rep.family = L.family.label();
  if (L.family == SurfaceFamily{Kind::E, 3}) {
    for (int i = 1; i <= 3; ++i) rep.left.push_back(L.l(i) - L.unit("h"));
    rep.right = {L.unit("h"), L.cls({{"h", 2}, {"l1", -1}, {"l2", -1}, {"l3", -1}})};
  } else if (L.family == SurfaceFamily{Kind::D, 2}) {
    rep.left = {L.l(1) - L.unit("s"), L.l(2) - L.unit("s")};
    rep.right = {L.unit("s"), L.cls({{"s", 1}, {"f", 1}, {"l1", -1}, {"l2", -1}})};
  } else {
    throw std::invalid_argument("appendix_tensor_check: expected E3 or D2, got " + rep.family);
  }

  std::vector<DivisorClass> sums;
  WeightMultiset product;
  for (const auto& a : rep.left)
    for (const auto& b : rep.right) {
      sums.push_back(a + b);
      product.add(weight_of(R, a) + weight_of(R, b));
    }
  rep.products = sums.size();
  sort_unique(sums);
  const auto lines = enumerate_lines(L);
  rep.classes_match = sums.size() == rep.products && sums.size() == lines.size() &&
                      std::equal(sums.begin(), sums.end(), lines.classes.begin(), same);
  rep.weights_match = product == line_weight_multiset(R, lines);

  if (L.family.kind == Kind::D) {
    // z_ij = left_i + right_j in the line coordinates; Segre: z11 z22 - z12 z21.
    QuadricSystem q;
    q.variables = line_variables(R);
    auto var = [&](std::size_t i, std::size_t j) {
      const DivisorClass c = rep.left[i] + rep.right[j];
      for (std::size_t v = 0; v < q.variables.size(); ++v)
        if (same(q.variables[v].cls, c)) return static_cast<int>(v);
      throw std::logic_error("appendix_tensor_check: product is not a line");
    };
    auto mono = [](int a, int b) { return a < b ? Monomial{a, b} : Monomial{b, a}; };
    q.quadrics.push_back({{Rational(1), mono(var(0, 0), var(1, 1))}, {Rational(-1), mono(var(0, 1), var(1, 0))}});
    rep.segre_homogeneous = is_homogeneous(q);
    rep.segre = std::move(q);
  }
  return rep;
}

}  // namespace adecox
