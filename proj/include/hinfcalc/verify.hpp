#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hinfcalc::verify {

struct Options {
  bool quick = false;  // smaller grids, tolerances relaxed 3x
  std::uint64_t seed = 0x5eed2024;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full acceptance suite in criterion order.
std::vector<CriterionResult> run_all(const Options& options);

/// One line per criterion plus a summary row.
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hinfcalc::verify
