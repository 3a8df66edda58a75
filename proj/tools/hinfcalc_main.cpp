#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hinfcalc/admissibility.hpp"
#include "hinfcalc/calculus.hpp"
#include "hinfcalc/families.hpp"
#include "hinfcalc/io.hpp"
#include "hinfcalc/svg.hpp"
#include "hinfcalc/sweep.hpp"
#include "hinfcalc/verify.hpp"

namespace {

using namespace hinfcalc;

constexpr int kExitPass = 0;
constexpr int kExitInvariantBreach = 1;
constexpr int kExitInvalidInput = 2;

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> generators;
  std::vector<std::string> functions;
  std::vector<double> eps;
  bool eps_given = false;
  int n_samples = 0;
  double horizon = 0.0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  std::string svg_path;
  std::string dump_prefix;
  std::string oracle;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "experiment config JSON file");
  cmd->add_option("--A", flags.generators,
                  "generator spec: diag:<list> | <family>:<n> | file:<path>");
  cmd->add_option("--g", flags.functions, "function: reference id or source string");
  cmd->add_option("--eps", flags.eps, "eps values")->trigger_on_parse();
  cmd->add_option("--N", flags.n_samples, "time samples (power of two)");
  cmd->add_option("--T", flags.horizon, "horizon override");
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--out", flags.out, "output path");
  cmd->add_option("--svg", flags.svg_path, "SVG chart path");
  cmd->add_option("--dump", flags.dump_prefix, "trajectory/spectrum dump prefix");
  cmd->add_option("--oracle", flags.oracle, "oracle id for side-by-side error (spectral)");
}

sweep::ExperimentConfig build_config(const CommonFlags& flags, const CLI::App* cmd) {
  sweep::ExperimentConfig config;
  if (!flags.config_path.empty()) {
    config = sweep::ExperimentConfig::from_json(io::read_text_file(flags.config_path));
  }
  if (!flags.generators.empty()) config.generators = flags.generators;
  if (!flags.functions.empty()) config.functions = flags.functions;
  if (cmd->count("--eps") > 0) config.eps = flags.eps;
  if (flags.n_samples > 0) config.n_samples = flags.n_samples;
  if (flags.horizon > 0.0) config.horizon = flags.horizon;
  if (cmd->count("--seed") > 0) config.seed = flags.seed;
  if (!flags.out.empty()) config.out_csv = flags.out;
  if (!flags.svg_path.empty()) config.out_svg = flags.svg_path;
  if (!flags.dump_prefix.empty()) config.dump_prefix = flags.dump_prefix;
  config.oracle_column = flags.oracle == "spectral";
  return config;
}

signals::TimeGrid grid_for(const sweep::ExperimentConfig& config,
                           const linops::GeneratorMatrix& a) {
  if (config.horizon) {
    return signals::TimeGrid(*config.horizon / config.n_samples, config.n_samples,
                             config.pad_factor);
  }
  return signals::TimeGrid::for_generator(a, config.n_samples, config.pad_factor);
}

int cmd_calc(const sweep::ExperimentConfig& config) {
  if (config.generators.empty()) {
    throw InvalidInputError("calc: at least one --A generator is required");
  }
  std::vector<std::string> function_specs = config.functions;
  if (function_specs.empty()) function_specs = {"one"};

  for (const std::string& generator_spec : config.generators) {
    const linops::GeneratorMatrix a = families::from_spec(generator_spec);
    const signals::TimeGrid grid = grid_for(config, a);
    std::vector<funcspec::FuncExpr> functions;
    for (const std::string& spec : function_specs) {
      functions.push_back(families::function_from_spec(spec));
    }
    const auto results = calculus::construct_batch(a, functions, grid);
    for (std::size_t gi = 0; gi < results.size(); ++gi) {
      std::string json = io::calculus_result_to_json(results[gi]);
      if (config.oracle_column) {
        const Matrix oracle = calculus::spectral_oracle(a, functions[gi]);
        const double err = linops::operator_norm(results[gi].value - oracle) /
                           std::max(linops::operator_norm(oracle), 1.0);
        json.back() = ',';  // splice the oracle error into the object
        json += "\"oracle_error\":" + io::format_number(err) + "}";
      }
      if (!config.out_csv.empty()) {
        const std::string path = config.generators.size() * function_specs.size() == 1
                                     ? config.out_csv
                                     : config.out_csv + "." + generator_spec + "." +
                                           function_specs[gi] + ".json";
        io::write_text_file(path, json + "\n");
      } else {
        std::cout << json << "\n";
      }
      std::cout << "calc " << generator_spec << " g=" << function_specs[gi]
                << " residual=" << io::format_number(results[gi].extraction_residual)
                << (results[gi].horizon_warning ? " [horizon warning]" : "") << "\n";
    }
    if (!config.dump_prefix.empty()) {
      const signals::Trajectory f = calculus::semigroup_trajectory(
          a, Vector::Unit(a.dim(), 0), grid);
      std::ofstream traj_file(config.dump_prefix + ".trajectory.csv");
      io::dump_trajectory_csv(f, traj_file);
      std::ofstream spec_file(config.dump_prefix + ".spectrum.csv");
      io::dump_spectrum_csv(signals::laplace_boundary(f), spec_file);
    }
  }
  return kExitPass;
}

int cmd_admiss(const sweep::ExperimentConfig& config, const std::string& observation_path) {
  if (config.generators.empty()) {
    throw InvalidInputError("admiss: at least one --A generator is required");
  }
  std::ostringstream csv;
  csv << "family,n,kappa,kappa_star,method\n";
  for (const std::string& generator_spec : config.generators) {
    const linops::GeneratorMatrix a = families::from_spec(generator_spec);
    if (observation_path.empty()) {
      const auto [profile, profile_star] = admissibility::sqrt_profile(a);
      csv << generator_spec << ',' << a.dim() << ',' << io::format_number(profile.kappa)
          << ',' << io::format_number(profile_star.kappa) << ",gramian\n";
    } else {
      const Matrix c = io::read_matrix_json(observation_path);
      const double gram = admissibility::gramian(a, c).kappa;
      const double quad =
          admissibility::quadrature(a, c, grid_for(config, a), generator_spec,
                                    observation_path, config.seed)
              .kappa;
      csv << generator_spec << ',' << a.dim() << ',' << io::format_number(gram) << ','
          << io::format_number(gram) << ",gramian\n";
      csv << generator_spec << ',' << a.dim() << ',' << io::format_number(quad) << ','
          << io::format_number(quad) << ",quadrature\n";
    }
  }
  if (!config.out_csv.empty()) {
    io::write_text_file(config.out_csv, csv.str());
  } else {
    std::cout << csv.str();
  }
  return kExitPass;
}

int cmd_sweep(const sweep::ExperimentConfig& config) {
  const auto records = sweep::run_sweep(config);
  const std::string csv = sweep::records_to_csv(records);
  if (!config.out_csv.empty()) {
    io::write_text_file(config.out_csv, csv);
  } else {
    std::cout << csv;
  }
  if (!config.out_svg.empty()) {
    io::write_text_file(config.out_svg, svg::render_log_ratio_chart(records));
  }
  return kExitPass;
}

int cmd_search(const sweep::ExperimentConfig& config) {
  const auto report = sweep::run_search(config);
  const std::string json = sweep::search_report_to_json(report);
  if (!config.out_csv.empty()) {
    io::write_text_file(config.out_csv, json + "\n");
  }
  std::cout << json << "\n";
  return kExitPass;
}

int cmd_verify(bool quick) {
  verify::Options options;
  options.quick = quick;
  const auto results = verify::run_all(options);
  verify::print_results(results, std::cout);
  return verify::all_passed(results) ? kExitPass : kExitInvariantBreach;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz-based functional calculus workbench for stable generators"};
  app.require_subcommand(1);

  CommonFlags calc_flags, admiss_flags, sweep_flags, search_flags;
  std::string observation_path;
  bool quick = false;
  int search_factors = 8;
  int search_candidates = 24;
  double search_eps = 1e-3;

  CLI::App* calc = app.add_subcommand("calc", "construct g(A) and write JSON results");
  add_common(calc, calc_flags);

  CLI::App* admiss =
      app.add_subcommand("admiss", "admissibility constants (sqrt profile or a given C)");
  add_common(admiss, admiss_flags);
  admiss->add_option("--C", observation_path, "observation matrix JSON file");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "norm sweep over (A, g, eps); CSV + SVG");
  add_common(sweep_cmd, sweep_flags);

  CLI::App* search = app.add_subcommand("search", "random worst-case Blaschke search");
  add_common(search, search_flags);
  search->add_option("--factors", search_factors, "max Blaschke factors (<= 32)");
  search->add_option("--candidates", search_candidates, "number of candidates");
  search->add_option("--search-eps", search_eps, "eps for the search objective");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_flag("--quick", quick, "reduced grids, tolerances relaxed 3x");

  CLI11_PARSE(app, argc, argv);

  try {
    if (calc->parsed()) return cmd_calc(build_config(calc_flags, calc));
    if (admiss->parsed()) return cmd_admiss(build_config(admiss_flags, admiss), observation_path);
    if (sweep_cmd->parsed()) return cmd_sweep(build_config(sweep_flags, sweep_cmd));
    if (search->parsed()) {
      auto config = build_config(search_flags, search);
      config.search_factors = search_factors;
      config.search_candidates = search_candidates;
      config.search_eps = search_eps;
      return cmd_search(config);
    }
    if (verify_cmd->parsed()) return cmd_verify(quick);
  } catch (const InvalidInputError& error) {
    std::cerr << "invalid input: " << error.what() << "\n";
    return kExitInvalidInput;
  } catch (const SyntaxError& error) {
    std::cerr << "syntax error: " << error.what() << "\n";
    return kExitInvalidInput;
  } catch (const CertificationError& error) {
    std::cerr << "certification failure: " << error.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvariantBreachError& error) {
    std::cerr << "invariant breach: " << error.what() << "\n";
    return kExitInvariantBreach;
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInvariantBreach;
  }
  return kExitPass;
}
