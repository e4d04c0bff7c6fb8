#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace adecox {

namespace mp = boost::multiprecision;

// Expression templates are off so the scalars behave inside Eigen containers.
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;

/// Coordinates of a divisor class in the fixed basis of its lattice.
using DivisorClass = IntVector;
/// Dynkin labels of a weight, one entry per simple root.
using WeightVector = IntVector;

/// Lexicographic order on integer vectors. Shorter vectors sort first.
struct LexLess {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

inline bool same(const IntVector& a, const IntVector& b) {
  return a.size() == b.size() && a == b;
}

inline IntVector int_vector(std::initializer_list<std::int64_t> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline std::vector<std::int64_t> to_std(const IntVector& v) {
  return {v.data(), v.data() + v.size()};
}

inline void sort_unique(std::vector<IntVector>& xs) {
  std::sort(xs.begin(), xs.end(), LexLess{});
  xs.erase(std::unique(xs.begin(), xs.end(), [](const IntVector& a, const IntVector& b) { return same(a, b); }),
           xs.end());
}

/// "p/q" or "p" for integral values.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p/q" or an integer. Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace adecox
