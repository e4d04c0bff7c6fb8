#include "adecox/curves.hpp"

#include <cmath>
#include <stdexcept>

namespace adecox {

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::roots: return "roots";
    case CurveKind::lines: return "lines";
    case CurveKind::rulings: return "rulings";
  }
  return "?";
}

CurveKind parse_curve_kind(const std::string& text) {
  if (text == "roots") return CurveKind::roots;
  if (text == "lines") return CurveKind::lines;
  if (text == "rulings") return CurveKind::rulings;
  throw std::invalid_argument("unknown class kind '" + text + "' (expected roots, lines or rulings)");
}

CurveEquations equations_for(CurveKind k) {
  switch (k) {
    case CurveKind::roots: return {-2, 0};
    case CurveKind::lines: return {-1, -1};
    case CurveKind::rulings: return {0, -2};
  }
  return {0, 0};
}

bool ClassSet::contains(const DivisorClass& d) const {
  return std::binary_search(classes.begin(), classes.end(), d, LexLess{});
}

namespace {

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Writing a class as (leading a, free exceptional coefficients b_1..b_N), the equations
// reduce to sum(b) = B(a) and sum(b^2) = S(a):
//   E: D = a h + sum b_i l_i (b_{n+1} = 0), N = n:   S = a^2 - q,  B = -3a - p
//   D: D = a f + sum b_i l_i (s-coeff 0),   N = n:   S = -q,       B = -2a - p
//   A: D = sum b_i l_i (h-coeff 0),         N = n+1: S = -q,       B = -p
// Cauchy-Schwarz B^2 <= N S then confines a. For E this is
//   (9 - N) a^2 + 6 p a + p^2 + N q <= 0,
// a bounded interval because N <= 8; for D it is |2a + p| <= sqrt(N S).
struct Reduction {
  Eigen::Index lead = -1;               // coordinate index of a, or -1 when a is fixed at 0
  std::vector<Eigen::Index> free;       // coordinates of b_1..b_N
  std::int64_t S(std::int64_t a, std::int64_t q, Kind k) const { return k == Kind::E ? a * a - q : -q; }
  std::int64_t B(std::int64_t a, std::int64_t p, Kind k) const {
    switch (k) {
      case Kind::E: return -3 * a - p;
      case Kind::D: return -2 * a - p;
      case Kind::A: return -p;
    }
    return 0;
  }
};

Reduction reduction_for(const IntersectionLattice& L) {
  Reduction r;
  const int n = L.family.n;
  switch (L.family.kind) {
    case Kind::E:
      r.lead = 0;
      for (int i = 1; i <= n; ++i) r.free.push_back(i);
      break;
    case Kind::D:
      r.lead = 0;
      for (int i = 1; i <= n; ++i) r.free.push_back(i + 1);
      break;
    case Kind::A:
      for (int i = 1; i <= n + 1; ++i) r.free.push_back(i);
      break;
  }
  return r;
}

bool cauchy_schwarz_ok(std::int64_t B, std::int64_t S, std::int64_t N) { return S >= 0 && B * B <= N * S; }

// All b in Z^N with sum = B and sum of squares = S, appended in lexicographic order.
void fill_free(std::vector<std::int64_t>& b, std::size_t pos, std::int64_t B, std::int64_t S,
               std::vector<std::vector<std::int64_t>>& out) {
  const auto remaining = static_cast<std::int64_t>(b.size() - pos);
  if (remaining == 0) {
    if (B == 0 && S == 0) out.push_back(b);
    return;
  }
  if (!cauchy_schwarz_ok(B, S, remaining)) return;
  if (((B - S) % 2) != 0) return;  // x^2 and x share parity
  const std::int64_t r = isqrt(S);
  for (std::int64_t x = -r; x <= r; ++x) {
    b[pos] = x;
    fill_free(b, pos + 1, B - x, S - x * x, out);
  }
}

}  // namespace

SearchBounds search_bounds(const IntersectionLattice& L, std::int64_t q, std::int64_t p) {
  const Reduction red = reduction_for(L);
  const auto N = static_cast<std::int64_t>(red.free.size());
  const Kind k = L.family.kind;
  SearchBounds sb;
  if (k == Kind::A) {
    sb.derivation = "A: D.C = 0 forces the h-coefficient to 0; sum(b) = " + std::to_string(-p) +
                    ", sum(b^2) = " + std::to_string(-q);
    return sb;
  }
  // Real roots of the Cauchy-Schwarz quadratic, widened and then filtered exactly.
  double lo_r = 0, hi_r = 0;
  if (k == Kind::E) {
    const double A = 9.0 - static_cast<double>(N), Bq = 6.0 * p, Cq = double(p) * p + double(N) * q;
    const double disc = std::max(0.0, Bq * Bq - 4 * A * Cq);
    lo_r = (-Bq - std::sqrt(disc)) / (2 * A);
    hi_r = (-Bq + std::sqrt(disc)) / (2 * A);
    sb.derivation = "E: (3a" + std::string(p < 0 ? "-" : "+") + std::to_string(std::abs(p)) + ")^2 <= " +
                    std::to_string(N) + "(a^2" + (q < 0 ? "+" : "-") + std::to_string(std::abs(q)) + ")";
  } else {
    const double r = std::sqrt(double(N) * double(-q));
    lo_r = (-p - r) / 2.0;
    hi_r = (-p + r) / 2.0;
    sb.derivation = "D: |2a" + std::string(p < 0 ? "-" : "+") + std::to_string(std::abs(p)) + "| <= sqrt(" +
                    std::to_string(N) + "*" + std::to_string(-q) + ")";
  }
  auto lo = static_cast<std::int64_t>(std::floor(lo_r)) - 1;
  auto hi = static_cast<std::int64_t>(std::ceil(hi_r)) + 1;
  auto feasible = [&](std::int64_t a) { return cauchy_schwarz_ok(red.B(a, p, k), red.S(a, q, k), N); };
  while (lo <= hi && !feasible(lo)) ++lo;
  while (hi >= lo && !feasible(hi)) --hi;
  sb.lo = lo;
  sb.hi = hi;
  sb.derivation += " => " + std::to_string(lo) + " <= a <= " + std::to_string(hi);
  return sb;
}

std::vector<DivisorClass> solve_class_equations(const IntersectionLattice& L, std::int64_t q, std::int64_t p) {
  const Reduction red = reduction_for(L);
  const Kind k = L.family.kind;
  const SearchBounds sb = search_bounds(L, q, p);
  std::vector<DivisorClass> out;
  std::vector<std::int64_t> b(red.free.size());
  for (std::int64_t a = sb.lo; a <= sb.hi; ++a) {
    std::vector<std::vector<std::int64_t>> frees;
    fill_free(b, 0, red.B(a, p, k), red.S(a, q, k), frees);
    for (const auto& fb : frees) {
      DivisorClass d = L.zero();
      if (red.lead >= 0) d(red.lead) = a;
      for (std::size_t i = 0; i < fb.size(); ++i) d(red.free[i]) = fb[i];
      out.push_back(std::move(d));
    }
  }
  sort_unique(out);
  return out;
}

ClassSet enumerate(const IntersectionLattice& L, CurveKind kind) {
  const auto eq = equations_for(kind);
  return ClassSet{L, kind, solve_class_equations(L, eq.square, eq.canonical)};
}

ClassSet enumerate_roots(const IntersectionLattice& L) { return enumerate(L, CurveKind::roots); }
ClassSet enumerate_lines(const IntersectionLattice& L) { return enumerate(L, CurveKind::lines); }
ClassSet enumerate_rulings(const IntersectionLattice& L) { return enumerate(L, CurveKind::rulings); }

std::int64_t pairs_of_lines_summing_to(const IntersectionLattice& L, const DivisorClass& target,
                                       const ClassSet& lines) {
  if (target.size() != L.rank()) throw std::invalid_argument("pairs_of_lines_summing_to: rank mismatch");
  std::int64_t count = 0;
  LexLess less;
  for (const auto& l : lines.classes) {
    const DivisorClass partner = target - l;
    if (less(partner, l)) continue;  // count each unordered pair once
    if (lines.contains(partner)) ++count;
  }
  return count;
}

}  // namespace adecox
