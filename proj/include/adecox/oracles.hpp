#pragma once

// Reference computations that share no code path with the library routines they check.
// Used by the self-test and the unit tests.

#include <vector>

#include "adecox/lattice.hpp"
#include "adecox/weights.hpp"

namespace adecox::oracle {

/// Box search: every class with |coord| <= radius satisfying D^2 = square, D.K = canonical, D.C = 0.
std::vector<DivisorClass> naive_class_search(const IntersectionLattice& L, std::int64_t square,
                                             std::int64_t canonical, std::int64_t radius);

/// Character of Sym^2 of the defining module of sl(n+1), built pair by pair in epsilon
/// coordinates, expressed in the labels of simple roots eps_{i+1} - eps_i (the A-family order).
WeightMultiset sym2_defining_sl(int n);

/// Character of Sym^2 of the 6-dimensional module of so(6) (weights +-eps_k), in the labels of
/// the simple roots eps1-eps2, eps2-eps3, eps2+eps3.
WeightMultiset sym2_defining_so6();

/// Cartan matrix of the so(6) simple roots above.
IntMatrix so6_cartan();

/// Weights of the defining so(6) module: its highest weight is the first entry.
WeightVector so6_vector_highest_weight();

}  // namespace adecox::oracle
