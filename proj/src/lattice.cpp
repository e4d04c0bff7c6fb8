#include "adecox/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "adecox/exact_linalg.hpp"

namespace adecox {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::D: return 'D';
    case Kind::E: return 'E';
  }
  return '?';
}

Kind parse_kind(const std::string& text) {
  if (text == "A" || text == "a") return Kind::A;
  if (text == "D" || text == "d") return Kind::D;
  if (text == "E" || text == "e") return Kind::E;
  throw std::invalid_argument("unknown family kind '" + text + "' (expected A, D or E)");
}

bool SurfaceFamily::valid() const {
  switch (kind) {
    case Kind::A: return n >= 1;
    case Kind::D: return n >= 2;
    case Kind::E: return n >= 3 && n <= 8;
  }
  return false;
}

bool SurfaceFamily::semisimple_case() const {
  return (kind == Kind::D && n == 2) || (kind == Kind::E && n == 3);
}

std::string SurfaceFamily::label() const { return std::string(1, kind_letter(kind)) + std::to_string(n); }

IntersectionLattice build_lattice(const SurfaceFamily& family) {
  if (!family.valid()) throw std::invalid_argument("invalid surface family " + family.label());
  IntersectionLattice L;
  L.family = family;
  const int n = family.n;
  if (family.kind == Kind::D) {
    const int rank = n + 2;
    L.basis_labels = {"f", "s"};
    for (int i = 1; i <= n; ++i) L.basis_labels.push_back("l" + std::to_string(i));
    L.gram = IntMatrix::Zero(rank, rank);
    L.gram(0, 1) = L.gram(1, 0) = 1;
    for (int i = 2; i < rank; ++i) L.gram(i, i) = -1;
    L.K = IntVector::Ones(rank);
    L.K(0) = -2;
    L.K(1) = -2;
    L.C = IntVector::Unit(rank, 0);
    return L;
  }
  const int rank = n + 2;
  L.basis_labels = {"h"};
  for (int i = 1; i <= n + 1; ++i) L.basis_labels.push_back("l" + std::to_string(i));
  L.gram = IntMatrix::Zero(rank, rank);
  L.gram(0, 0) = 1;
  for (int i = 1; i < rank; ++i) L.gram(i, i) = -1;
  L.K = IntVector::Ones(rank);
  L.K(0) = -3;
  L.C = family.kind == Kind::E ? IntVector::Unit(rank, rank - 1) : IntVector::Unit(rank, 0);
  return L;
}

Eigen::Index IntersectionLattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_labels.size(); ++i)
    if (basis_labels[i] == label) return static_cast<Eigen::Index>(i);
  throw std::invalid_argument("no basis label '" + label + "' in lattice " + family.label());
}

DivisorClass IntersectionLattice::unit(const std::string& label) const {
  return DivisorClass::Unit(rank(), index_of(label));
}

DivisorClass IntersectionLattice::cls(std::initializer_list<std::pair<std::string, std::int64_t>> terms) const {
  DivisorClass d = zero();
  for (const auto& [label, coeff] : terms) d(index_of(label)) += coeff;
  return d;
}

Eigen::Index IntersectionLattice::c_index() const {
  Eigen::Index idx = 0;
  C.maxCoeff(&idx);
  return idx;
}

std::string IntersectionLattice::format(const DivisorClass& d) const {
  std::ostringstream out;
  bool first = true;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const auto c = d(i);
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << basis_labels[static_cast<std::size_t>(i)];
    first = false;
  }
  return first ? "0" : out.str();
}

std::int64_t pair(const IntersectionLattice& L, const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.size() != L.rank() || d2.size() != L.rank())
    throw std::invalid_argument("pair: class length does not match lattice rank");
  return d1.dot(L.gram * d2);
}

std::int64_t degree(const IntersectionLattice& L, const DivisorClass& d) { return -pair(L, d, L.K); }

std::string lattice_defect(const IntersectionLattice& L) {
  const auto& g = L.gram;
  if (g.rows() != g.cols() || g != g.transpose()) return "gram matrix is not symmetric";
  const BigInt det = determinant(g);
  if (det != 1 && det != -1) return "gram matrix is not unimodular (det " + det.str() + ")";
  const Signature sig = signature(g.cast<Rational>());
  if (sig.positive != 1 || sig.negative != L.rank() - 1 || sig.zero != 0) return "signature is not (1, rank-1)";
  const auto cc = pair(L, L.C, L.C), ck = pair(L, L.C, L.K), kk = pair(L, L.K, L.K);
  std::int64_t want_cc = 0, want_ck = 0;
  switch (L.family.kind) {
    case Kind::E: want_cc = -1; want_ck = -1; break;
    case Kind::D: want_cc = 0; want_ck = -2; break;
    case Kind::A: want_cc = 1; want_ck = -3; break;
  }
  if (cc != want_cc || ck != want_ck) return "(C^2, C.K) differs from the family values";
  if (cc * kk - ck * ck == 0) return "Gram matrix of (C, K) is degenerate";
  return {};
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace adecox
