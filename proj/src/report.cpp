#include "adecox/report.hpp"

#include <sstream>

#include "adecox/exact_linalg.hpp"
#include "adecox/roots.hpp"
#include "adecox/weights.hpp"

namespace adecox {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw InputError("unknown format '" + text + "' (expected json or csv)");
}

SurfaceConfigD parse_points(const std::string& text) {
  SurfaceConfigD cfg;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      cfg.points.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (text.empty() || text.back() == ',') throw InputError("empty entry in point list '" + text + "'");
  return cfg;
}

Json to_json(const DivisorClass& d) { return Json(to_std(d)); }

Json to_json(const Polynomial& p, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& t : p) {
    std::string text;
    for (int v : t.monomial) text += (text.empty() ? "" : "*") + names[static_cast<std::size_t>(v)];
    terms.push_back({{"coeff", to_string(t.coeff)}, {"monomial", t.monomial}, {"text", text}});
  }
  return terms;
}

namespace {

Json header(const RunConfig& cfg, const std::string& command) {
  return {{"family", std::string(1, kind_letter(cfg.family.kind))},
          {"n", cfg.family.n},
          {"command", command},
          {"results", Json::array()}};
}

IntersectionLattice checked_lattice(const RunConfig& cfg) {
  if (!cfg.family.valid()) throw InputError("invalid family " + cfg.family.label());
  if (cfg.points && cfg.family.kind != Kind::D) throw InputError("--points applies to the D-family only");
  if (cfg.max_degree < 0 || cfg.max_degree > 12) throw InputError("--max-degree must lie in 0..12");
  return build_lattice(cfg.family);
}

// Points are mandatory for D_n with n >= 3 when `needed`; validated whenever present.
std::optional<SurfaceConfigD> checked_points(const RunConfig& cfg, bool needed) {
  if (cfg.family.kind != Kind::D) return std::nullopt;
  if (!cfg.points) {
    if (needed && cfg.family.n >= 3) throw InputError("this check needs --points for " + cfg.family.label());
    return std::nullopt;
  }
  try {
    validate_points(*cfg.points, cfg.family.n);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return cfg.points;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// One verify line: the integers compared and the verdict.
struct Check {
  std::string check;
  std::string subject;
  Json expected;
  Json actual;
  bool pass = false;
};

Document finish(Json json, const std::vector<Check>& checks) {
  Document doc;
  doc.table.push_back({"check", "subject", "expected", "actual", "pass"});
  bool all = true;
  for (const auto& c : checks) {
    json["results"].push_back(
        {{"check", c.check}, {"subject", c.subject}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    auto cell = [](const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
    doc.table.push_back({c.check, c.subject, cell(c.expected), cell(c.actual), c.pass ? "true" : "false"});
    all = all && c.pass;
  }
  json["pass"] = all;
  doc.json = std::move(json);
  doc.exit_code = all ? 0 : 1;
  return doc;
}

std::vector<Check> verify_sym2(const IntersectionLattice& L) {
  const auto R = build_root_system(L);
  const auto d = decompose_sym2(R);
  const std::int64_t m = line_weight_multiset(R).total();
  const BigInt v_dim = weyl_dim(R.datum, 2 * weight_of(R, highest_line_class(L)));
  std::vector<Check> out;
  out.push_back({"sym2_total", "Sym2 L", m * (m + 1) / 2, d.sym2.total(), d.sym2.total() == m * (m + 1) / 2});
  out.push_back({"v_dimension", "V(2 l)", v_dim.str(), std::to_string(d.v_part.total()), BigInt(d.v_part.total()) == v_dim});
  out.push_back({"split", "Sym2 L = W + V(2 l)", d.sym2.total(), d.w_part.total() + d.v_part.total(),
                 d.sym2.total() == d.w_part.total() + d.v_part.total()});
  out.push_back({"remainder", d.expected_description, d.expected.total(), d.w_part.total(), d.matches});
  const bool inv = is_weyl_invariant(R.datum, d.sym2) && is_weyl_invariant(R.datum, d.v_part) &&
                   is_weyl_invariant(R.datum, d.w_part);
  out.push_back({"weyl_invariant", "Sym2 L, V, W", true, inv, inv});
  return out;
}

std::vector<Check> verify_weights(const IntersectionLattice& L) {
  const auto R = build_root_system(L);
  const auto lines = enumerate_lines(L);
  const auto orbit = weyl_orbit(R, L.l(L.family.n));
  const bool same_set = orbit.size() == lines.size() &&
                        std::equal(orbit.begin(), orbit.end(), lines.classes.begin(), same);
  std::vector<Check> out;
  out.push_back({"line_orbit", "W l" + std::to_string(L.family.n) + " = lines", static_cast<std::int64_t>(lines.size()),
                 static_cast<std::int64_t>(orbit.size()), same_set});
  const auto rep = verify_weight_lemma(R);
  out.push_back({"line_weights", "Pi(highest line) = line weights", rep.line_module_dim,
                 line_weight_multiset(R, lines).total(), rep.lines_match});
  if (rep.rulings_checked)
    out.push_back({"ruling_weights", "Pi(h-l1) vs rulings: " + rep.rulings_relation, rep.ruling_count,
                   rep.ruling_module_dim, rep.rulings_match});
  return out;
}

CoxPresentation presentation_for(const IntersectionLattice& L, const std::optional<SurfaceConfigD>& pts) {
  if (L.family.kind == Kind::D && pts) return dn_ideal(L, *pts);
  return cox_presentation(L);
}

std::vector<Check> verify_hilbert_cmd(const IntersectionLattice& L, const RunConfig& cfg) {
  if (L.family.kind == Kind::E) throw InputError("hilbert checks cover the A- and D-families");
  const auto P = presentation_for(L, checked_points(cfg, true));
  const auto rep = verify_hilbert(P, cfg.max_degree);
  std::vector<Check> out;
  for (const auto& c : rep.checks)
    out.push_back({"hilbert", L.format(c.cls) + " (degree " + std::to_string(c.degree) + ")", c.sections, c.graded,
                   c.ok()});
  return out;
}

std::vector<Check> verify_census(const IntersectionLattice& L, const RunConfig& cfg) {
  const auto pts = checked_points(cfg, true);
  const auto lines = enumerate_lines(L);
  std::vector<Check> out;
  std::int64_t total = 0;
  for (const auto& target : census_targets(L)) {
    const auto c = relation_census(L, target, lines);
    total += c.relations;
    out.push_back({"census", L.format(target) + " (" + std::to_string(c.monomials) + " monomials, " +
                                 std::to_string(c.sections) + " sections)",
                   c.monomials - c.sections, c.relations, c.relations >= 0});
  }
  if (pts && L.family.n >= 3) {
    // The explicit ideal must account for exactly the counted quadrics at class f.
    const auto P = dn_ideal(L, *pts);
    const DivisorClass f = L.unit("f");
    const auto cols = monomials_of_class(P, f);
    const auto r = static_cast<std::int64_t>(rank(relation_matrix(P, f, cols)));
    out.push_back({"ideal_rank", "dn_ideal at f", total, r, r == total});
  }
  out.push_back({"census_total", "all targets", total, total, true});
  return out;
}

std::vector<Check> verify_git(const IntersectionLattice& L, const RunConfig& cfg) {
  std::vector<Check> out;
  const int k = cfg.max_degree;
  std::vector<std::int64_t> expected;
  DivisorClass lin;
  if (L.family.kind == Kind::D) {
    lin = L.unit("f");
    for (int i = 0; i <= k; ++i) expected.push_back(i + 1);
  } else if (L.family.kind == Kind::A) {
    lin = L.l(1);
    expected.assign(static_cast<std::size_t>(k) + 1, 1);
  } else {
    throw InputError("git checks cover the A- and D-families");
  }
  const auto h = git_hilbert(L, lin, k);
  out.push_back({"git_sections", L.format(lin) + " ray", join(expected), join(h), h == expected});
  const auto pts = checked_points(cfg, false);
  if (L.family.kind == Kind::A || pts || L.family.n < 3) {
    const auto g = git_hilbert(presentation_for(L, pts), lin, k);
    out.push_back({"git_graded", L.format(lin) + " ray, Cox ring", join(expected), join(g), g == expected});
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

Json generators_json(const CoxPresentation& P) {
  Json gens = Json::array();
  for (const auto& g : P.generators) gens.push_back({{"name", g.name}, {"class", to_json(g.cls)}, {"degree", 1}});
  return gens;
}

std::vector<std::string> names_of(const std::vector<Generator>& gs) {
  std::vector<std::string> names;
  for (const auto& g : gs) names.push_back(g.name);
  return names;
}

Json quadric_system_json(const QuadricSystem& q, const std::vector<std::string>& targets) {
  std::vector<std::string> names;
  Json vars = Json::array();
  for (const auto& v : q.variables) {
    names.push_back(v.name);
    vars.push_back({{"name", v.name}, {"class", to_json(v.cls)}, {"weight", to_std(v.weight)}});
  }
  Json quads = Json::array();
  for (const auto& p : q.quadrics) quads.push_back(to_json(p, names));
  Json out = {{"variables", vars}, {"quadrics", quads}, {"homogeneous", is_homogeneous(q)}};
  if (!q.substitution.empty()) {
    Json sub = Json::array();
    for (std::size_t i = 0; i < q.substitution.size(); ++i)
      sub.push_back({{"variable", names[i]},
                     {"scalar", to_string(q.substitution[i].scalar)},
                     {"target", targets[static_cast<std::size_t>(q.substitution[i].target)]}});
    out["substitution"] = sub;
  }
  return out;
}

}  // namespace

std::string render(const Document& doc, Format format) {
  if (format == Format::json) return doc.json.dump(2) + "\n";
  if (doc.table.empty()) throw InputError("csv output is available for tabular commands only");
  std::string out;
  for (const auto& row : doc.table) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += "\n";
  }
  return out;
}

Document cmd_enumerate(const RunConfig& cfg, CurveKind what) {
  const auto L = checked_lattice(cfg);
  const auto set = enumerate(L, what);
  const auto eq = equations_for(what);
  const auto bounds = search_bounds(L, eq.square, eq.canonical);

  Json classes = Json::array();
  Document doc;
  doc.table.push_back({"index"});
  for (const auto& b : L.basis_labels) doc.table.front().push_back(b);
  for (std::size_t i = 0; i < set.classes.size(); ++i) {
    classes.push_back(to_json(set.classes[i]));
    std::vector<std::string> row{std::to_string(i)};
    for (auto x : to_std(set.classes[i])) row.push_back(std::to_string(x));
    doc.table.push_back(std::move(row));
  }
  doc.json = header(cfg, "enumerate");
  doc.json["results"].push_back({{"kind", to_string(what)},
                                 {"count", set.size()},
                                 {"basis", L.basis_labels},
                                 {"square", eq.square},
                                 {"canonical", eq.canonical},
                                 {"bounds", {{"lo", bounds.lo}, {"hi", bounds.hi}, {"derivation", bounds.derivation}}},
                                 {"classes", classes}});
  return doc;
}

Document cmd_verify(const RunConfig& cfg, const std::string& which) {
  const auto L = checked_lattice(cfg);
  Json json = header(cfg, "verify");
  json["which"] = which;
  if (which == "sym2") return finish(std::move(json), verify_sym2(L));
  if (which == "weights") return finish(std::move(json), verify_weights(L));
  if (which == "hilbert") return finish(std::move(json), verify_hilbert_cmd(L, cfg));
  if (which == "census") return finish(std::move(json), verify_census(L, cfg));
  if (which == "git") return finish(std::move(json), verify_git(L, cfg));
  throw InputError("unknown check '" + which + "' (expected sym2, weights, hilbert, census or git)");
}

Document cmd_quadrics(const RunConfig& cfg) {
  const auto L = checked_lattice(cfg);
  const auto R = build_root_system(L);
  Document doc;
  doc.json = header(cfg, "quadrics");
  auto& results = doc.json["results"];
  bool pass = true;

  if (L.family.semisimple_case()) {
    const auto rep = appendix_tensor_check(R);
    const auto P = cox_presentation(L);
    results.push_back({{"section", "generators"}, {"generators", generators_json(P)}});
    auto list = [&](const std::vector<DivisorClass>& cs) {
      Json j = Json::array();
      for (const auto& c : cs) j.push_back(to_json(c));
      return j;
    };
    results.push_back({{"section", "tensor"},
                       {"left", list(rep.left)},
                       {"right", list(rep.right)},
                       {"products", rep.products},
                       {"classes_match", rep.classes_match},
                       {"weights_match", rep.weights_match}});
    if (rep.segre)
      results.push_back({{"section", "segre"}, {"system", quadric_system_json(*rep.segre, {})}});
    pass = rep.pass();
  } else if (L.family.kind == Kind::D) {
    const auto pts = checked_points(cfg, true);
    const auto P = dn_ideal(L, *pts);
    const auto names = names_of(P.generators);
    results.push_back({{"section", "generators"}, {"generators", generators_json(P)}});
    Json rels = Json::array();
    for (const auto& r : P.relations) rels.push_back({{"class", to_json(r.cls)}, {"terms", to_json(r.terms, names)}});
    results.push_back({{"section", "relations"}, {"homogeneous", is_pic_homogeneous(P) && is_torus_homogeneous(R, P)},
                       {"relations", rels}});
    const auto e = embed_cox_into_cone_D(R, *pts);
    Json coeffs = Json::array();
    for (const auto& c : e.coefficients) coeffs.push_back(to_string(c));
    results.push_back({{"section", "cone"}, {"system", quadric_system_json(e.cone, names)}});
    results.push_back({{"section", "embedding"},
                       {"coefficients", coeffs},
                       {"image", to_json(e.image, names)},
                       {"rank_before", e.rank_before},
                       {"rank_after", e.rank_after},
                       {"certified", e.certified}});
    pass = e.certified && is_homogeneous(e.cone) && is_pic_homogeneous(P) && is_torus_homogeneous(R, P);
  } else {
    throw InputError("quadrics covers the D-family with n >= 3 and the semisimple cases E3, D2");
  }
  doc.json["pass"] = pass;
  doc.exit_code = pass ? 0 : 1;
  return doc;
}

}  // namespace adecox
