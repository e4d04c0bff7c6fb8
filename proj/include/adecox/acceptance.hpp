#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adecox/lattice.hpp"

namespace adecox {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per comparison, failures marked "FAIL"
};

struct AcceptanceOptions {
  /// Source of every lattice the suite builds. Tests swap in a mutated lattice here.
  std::function<IntersectionLattice(const SurfaceFamily&)> lattice = build_lattice;
};

constexpr int criterion_count = 9;

/// Runs criterion `id` (1..9). Exceptions raised by the library count as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// Fixed-width table, one line per criterion, followed by the failing details.
std::string format_summary(const std::vector<CriterionResult>& results);

}  // namespace adecox
