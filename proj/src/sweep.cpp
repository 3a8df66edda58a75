#include "hinfcalc/sweep.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hinfcalc/admissibility.hpp"
#include "hinfcalc/calculus.hpp"
#include "hinfcalc/families.hpp"
#include "hinfcalc/io.hpp"

namespace hinfcalc::sweep {

namespace {

constexpr double kCertificateSlack = 1.01;

signals::TimeGrid grid_for(const ExperimentConfig& config, const linops::GeneratorMatrix& a) {
  if (config.horizon) {
    return signals::TimeGrid(*config.horizon / config.n_samples, config.n_samples,
                             config.pad_factor);
  }
  return signals::TimeGrid::for_generator(a, config.n_samples, config.pad_factor);
}

}  // namespace

std::vector<double> ExperimentConfig::default_eps_grid() {
  std::vector<double> eps(24);
  const double log_min = std::log(1e-6);
  const double log_max = std::log(1e-1);
  for (int i = 0; i < 24; ++i) {
    eps[i] = std::exp(log_min + (log_max - log_min) * i / 23.0);
  }
  return eps;
}

void ExperimentConfig::validate() const {
  if (generators.empty()) {
    throw InvalidInputError("config: no generators");
  }
  if (!(eps_max > 0.0) || eps_max > 0.1 + 1e-15) {
    throw InvalidInputError("config: eps_max must lie in (0, 0.1]");
  }
  if (eps) {
    for (double e : *eps) {
      if (!(e > 0.0) || e > eps_max * (1.0 + 1e-12)) {
        throw InvalidInputError("config: eps values must lie in (0, eps_max]");
      }
    }
  }
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json value = nlohmann::json::parse(text, nullptr, false);
  if (value.is_discarded() || !value.is_object()) {
    throw InvalidInputError("malformed experiment config JSON");
  }
  ExperimentConfig config;
  if (value.contains("generators")) {
    config.generators = value["generators"].get<std::vector<std::string>>();
  }
  if (value.contains("g")) {
    if (value["g"].is_string()) {
      config.functions = {value["g"].get<std::string>()};
    } else {
      config.functions = value["g"].get<std::vector<std::string>>();
    }
  }
  if (value.contains("eps")) config.eps = value["eps"].get<std::vector<double>>();
  if (value.contains("eps_max")) config.eps_max = value["eps_max"].get<double>();
  if (value.contains("N")) config.n_samples = value["N"].get<int>();
  if (value.contains("pad_factor")) config.pad_factor = value["pad_factor"].get<int>();
  if (value.contains("T")) config.horizon = value["T"].get<double>();
  if (value.contains("seed")) config.seed = value["seed"].get<std::uint64_t>();
  if (value.contains("out")) config.out_csv = value["out"].get<std::string>();
  if (value.contains("svg")) config.out_svg = value["svg"].get<std::string>();
  if (value.contains("dump")) config.dump_prefix = value["dump"].get<std::string>();
  if (value.contains("search_factors")) config.search_factors = value["search_factors"].get<int>();
  if (value.contains("search_candidates")) {
    config.search_candidates = value["search_candidates"].get<int>();
  }
  if (value.contains("search_eps")) config.search_eps = value["search_eps"].get<double>();
  return config;
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
  config.validate();
  const std::vector<double> eps_grid =
      config.eps ? *config.eps : ExperimentConfig::default_eps_grid();
  std::vector<std::string> function_specs = config.functions;
  if (function_specs.empty()) {
    for (const auto& [id, source] : families::reference_functions()) {
      function_specs.push_back(id);
    }
  }

  std::vector<SweepRecord> records;
  if (eps_grid.empty()) {
    return records;  // header-only output
  }
  for (const std::string& generator_spec : config.generators) {
    const linops::GeneratorMatrix a = families::from_spec(generator_spec);
    const signals::TimeGrid grid = grid_for(config, a);
    const auto [profile, profile_star] = admissibility::sqrt_profile(a);

    std::vector<funcspec::FuncExpr> functions;
    for (const std::string& spec : function_specs) {
      functions.push_back(families::function_from_spec(spec));
    }
    const std::vector<calculus::CalculusResult> constructed =
        calculus::construct_batch(a, functions, grid);

    // Certificates depend on (A, eps) only; share them across functions.
    std::map<double, calculus::CertificateEq6> certificates;
    for (double eps : eps_grid) {
      certificates.emplace(eps, calculus::proof_certificate(a, eps));
    }

    for (std::size_t gi = 0; gi < functions.size(); ++gi) {
      const double sup = funcspec::sup_norm(functions[gi]).value;
      const Matrix& g_of_a = constructed[gi].value;
      for (double eps : eps_grid) {
        const calculus::CertificateEq6& certificate = certificates.at(eps);
        SweepRecord record;
        record.family = generator_spec;
        record.n = static_cast<int>(a.dim());
        record.g_id = function_specs[gi];
        record.eps = eps;
        record.norm = calculus::semigroup_norm(a, g_of_a, eps);
        record.sup_norm = sup;
        record.log_ratio = record.norm / (sup * (1.0 + std::abs(std::log(eps))));
        record.sqrtlog_ratio = record.norm / (sup * (1.0 + std::sqrt(std::abs(std::log(eps)))));
        record.certificate = certificate.bound;
        record.kappa = profile.kappa;
        record.kappa_star = profile_star.kappa;

        const double doubled = calculus::semigroup_norm(a, g_of_a, 2.0 * eps);
        if (doubled > sup * certificate.bound * kCertificateSlack) {
          throw InvariantBreachError(
              "sweep row violates the certificate bound: family=" + record.family +
              " g=" + record.g_id + " eps=" + io::format_number(eps) +
              " norm(2eps)=" + io::format_number(doubled) +
              " bound=" + io::format_number(sup * certificate.bound));
        }
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "family,n,g_id,eps,norm,sup_norm,log_ratio,sqrtlog_ratio,certificate,kappa,kappa_star\n";
  for (const SweepRecord& r : records) {
    out << r.family << ',' << r.n << ',' << r.g_id << ',' << io::format_number(r.eps) << ','
        << io::format_number(r.norm) << ',' << io::format_number(r.sup_norm) << ','
        << io::format_number(r.log_ratio) << ',' << io::format_number(r.sqrtlog_ratio) << ','
        << io::format_number(r.certificate) << ',' << io::format_number(r.kappa) << ','
        << io::format_number(r.kappa_star) << '\n';
  }
  return out.str();
}

SearchReport run_search(const ExperimentConfig& config) {
  config.validate();
  if (config.search_factors < 0 || config.search_factors > 32) {
    throw InvalidInputError("search: factor cap must be in [0, 32]");
  }
  if (!(config.search_eps > 0.0)) {
    throw InvalidInputError("search: eps must be positive");
  }
  const linops::GeneratorMatrix a = families::from_spec(config.generators.front());
  const signals::TimeGrid grid = grid_for(config, a);

  SearchReport report;
  report.generator = config.generators.front();
  report.eps = config.search_eps;
  report.seed = config.seed;

  std::mt19937_64 rng(config.seed);
  const double log_weight = 1.0 + std::abs(std::log(config.search_eps));
  for (int candidate = 0; candidate < config.search_candidates; ++candidate) {
    const funcspec::FuncExpr g = families::random_blaschke(config.search_factors, rng);
    const calculus::CalculusResult result = calculus::construct(a, g, grid);
    const double sup = funcspec::sup_norm(g).value;
    const double ratio =
        calculus::semigroup_norm(a, result.value, config.search_eps) / (sup * log_weight);
    if (ratio > report.best_ratio) {
      report.best_ratio = ratio;
      report.best_source = funcspec::to_string(g);
    }
    report.ratio_trajectory.push_back(report.best_ratio);
  }
  return report;
}

std::string search_report_to_json(const SearchReport& report) {
  nlohmann::json out;
  out["generator"] = report.generator;
  out["eps"] = report.eps;
  out["seed"] = report.seed;
  out["best_source"] = report.best_source;
  out["best_ratio"] = report.best_ratio;
  out["ratio_trajectory"] = report.ratio_trajectory;
  return out.dump();
}

}  // namespace hinfcalc::sweep
