// Acceptance suite: one PASS/FAIL line per criterion, details for failures.
#include <cstdlib>
#include <iostream>

#include "adecox/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace adecox;
  std::vector<CriterionResult> results;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) results.push_back(run_criterion(std::atoi(argv[i])));
  } else {
    results = run_acceptance();
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
    if (!r.pass)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
