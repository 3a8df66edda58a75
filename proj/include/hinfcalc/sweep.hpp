#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hinfcalc/types.hpp"

namespace hinfcalc::sweep {

/// Full description of an experiment run; a fixed config and seed yield
/// byte-identical CSV output.
struct ExperimentConfig {
  std::vector<std::string> generators;  // generator specs, e.g. "jordan:8"
  std::vector<std::string> functions;   // reference ids or source strings
  // Unset: the 24-point log grid in [1e-6, 1e-1]. Explicitly empty: no rows.
  std::optional<std::vector<double>> eps;
  double eps_max = 0.1;
  int n_samples = 1 << 14;
  int pad_factor = 4;
  std::optional<double> horizon;  // overrides the per-generator default
  std::uint64_t seed = 0;
  std::string out_csv;
  std::string out_svg;
  std::string dump_prefix;
  bool oracle_column = false;

  // Worst-case search settings.
  int search_factors = 8;
  int search_candidates = 24;
  double search_eps = 1e-3;

  static std::vector<double> default_eps_grid();
  static ExperimentConfig from_json(const std::string& text);
  void validate() const;
};

struct SweepRecord {
  std::string family;
  int n = 0;
  std::string g_id;
  double eps = 0.0;
  double norm = 0.0;      // ||g(A) e^{A eps}||
  double sup_norm = 0.0;
  double log_ratio = 0.0;      // norm / (sup_norm * (1 + |log eps|))
  double sqrtlog_ratio = 0.0;  // norm / (sup_norm * (1 + sqrt|log eps|))
  double certificate = 0.0;    // 2 kappa*(eps) kappa(eps)
  double kappa = 0.0;          // sqrt-admissibility profile of A
  double kappa_star = 0.0;     // same for A*
};

/// Full factorial sweep in deterministic row order. Every row is checked
/// against the certificate bound ||g(A) e^{2 A eps}|| <=
/// sup_norm * certificate * 1.01; a violation raises InvariantBreachError.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

std::string records_to_csv(const std::vector<SweepRecord>& records);

struct SearchReport {
  std::string generator;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::string best_source;
  double best_ratio = 0.0;
  std::vector<double> ratio_trajectory;  // running maximum per candidate
};

/// Seeded random search over Blaschke products maximizing the log ratio at
/// a fixed generator and eps.
SearchReport run_search(const ExperimentConfig& config);

std::string search_report_to_json(const SearchReport& report);

}  // namespace hinfcalc::sweep
