#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cascade/apd.hpp"
#include "cascade/engine.hpp"
#include "cascade/network_io.hpp"
#include "cascade/report_format.hpp"
#include "cascade/scenario.hpp"

namespace cascade::cli {
namespace {

struct GlobalOptions {
  std::string format = "table";
  bool emit_db = false;
  std::string out_path;
};

struct AnalyzeOptions {
  std::string path;
};

struct ScenarioOptions {
  std::string name;
  std::optional<std::size_t> n;
  std::optional<double> gain;
  std::optional<double> external_noise;
  std::optional<double> internal_ratio;
  std::optional<double> input_noise;
  std::optional<double> input_signal;
};

struct ApdOptions {
  std::vector<double> probabilities;
  std::string steps_file;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

int emit(const GlobalOptions& global, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (global.out_path.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(global.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) {
    err << "error: cannot write " << global.out_path << "\n";
    return kInputError;
  }
  return kSuccess;
}

int analyze(const GlobalOptions& global, ReportFormat format, const AnalyzeOptions& opts,
            std::ostream& out, std::ostream& err) {
  const auto network = load_network(opts.path);
  const auto report = build_report(network);
  const auto breaches = check_report(report);
  if (!breaches.empty()) {
    for (const auto& b : breaches) {
      err << fmt::format("invariant breach: {}: {:.17g} vs {:.17g}\n", b.identity, b.lhs, b.rhs);
    }
    return kInvariantBreach;
  }
  return emit(global, render_noise_report(network, report, format, global.emit_db), out, err);
}

int scenario(const GlobalOptions& global, ReportFormat format, const ScenarioOptions& opts,
             std::ostream& out, std::ostream& err) {
  const auto kind = parse_scenario_name(opts.name);
  if (!kind) {
    err << "error: unknown scenario \"" << opts.name
        << "\" (expected fig2a, fig2b, fig2c, fig3, fig3a or fig3b)\n";
    return kInputError;
  }
  auto config = default_config(*kind);
  if (opts.n) config.n = *opts.n;
  if (opts.gain) config.gain = *opts.gain;
  if (opts.external_noise) config.external_noise = *opts.external_noise;
  if (opts.internal_ratio) config.internal_ratio = *opts.internal_ratio;
  if (opts.input_noise) config.input_noise = *opts.input_noise;
  if (opts.input_signal) config.input_signal = *opts.input_signal;
  return emit(global, render_series(run_scenario(*kind, config), format), out, err);
}

int apd(const GlobalOptions& global, ReportFormat format, const ApdOptions& opts,
        std::ostream& out, std::ostream& err) {
  const bool from_list = !opts.probabilities.empty();
  const bool from_file = !opts.steps_file.empty();
  if (from_list == from_file) {
    err << "error: give either --p (repeatable) or --p-file\n";
    return kInputError;
  }
  const StaircaseApd device = from_file ? load_apd_steps(opts.steps_file)
                                        : StaircaseApd{opts.probabilities};
  require_valid(device);

  std::optional<McEstimate> estimate;
  if (opts.trials) {
    estimate = mc_total_gain(device, {*opts.trials, opts.seed, opts.workers});
  }
  return emit(global, render_apd(device, estimate, format), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noise-factor analysis for n-stage cascade networks", "cascade-noise"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--db", global.emit_db, "Also emit noise figures in dB (10 log10 F)");
  app.add_option("--out", global.out_path, "Write the report to this file instead of stdout");

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Stage-wise and total noise factors of a network file");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("network", analyze_opts.path, "Network JSON file")->required();

  ScenarioOptions scenario_opts;
  auto* scenario_cmd = app.add_subcommand("scenario", "Identical-stage comparison series");
  scenario_cmd->fallthrough();
  scenario_cmd->add_option("name", scenario_opts.name, "fig2a | fig2b | fig2c | fig3 | fig3a | fig3b")
      ->required();
  scenario_cmd->add_option("--n", scenario_opts.n, "Stage count");
  scenario_cmd->add_option("--gain", scenario_opts.gain, "Common power gain (>= 1)");
  scenario_cmd->add_option("--ext", scenario_opts.external_noise, "Common external noise power");
  scenario_cmd->add_option("--delta", scenario_opts.internal_ratio,
                           "Internal noise as a fraction of each stage's input noise");
  scenario_cmd->add_option("--ni", scenario_opts.input_noise, "Input noise power");
  scenario_cmd->add_option("--si", scenario_opts.input_signal, "Input signal power");

  ApdOptions apd_opts;
  auto* apd_cmd = app.add_subcommand("apd", "Staircase APD excess noise with optional Monte Carlo");
  apd_cmd->fallthrough();
  apd_cmd->add_option("--p", apd_opts.probabilities, "Ionization probability of a step (repeatable)")
      ->take_all();
  apd_cmd->add_option("--p-file", apd_opts.steps_file, "JSON file with the step probabilities");
  apd_cmd->add_option("--trials", apd_opts.trials, "Monte Carlo trials (enables the diagnostic)");
  apd_cmd->add_option("--seed", apd_opts.seed, "Monte Carlo seed")->capture_default_str();
  apd_cmd->add_option("--workers", apd_opts.workers, "Monte Carlo worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const auto format = parse_report_format(global.format).value_or(ReportFormat::table);
  try {
    if (*analyze_cmd) return analyze(global, format, analyze_opts, out, err);
    if (*scenario_cmd) return scenario(global, format, scenario_opts, out, err);
    return apd(global, format, apd_opts, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    // ValidationError, std::domain_error, std::invalid_argument, std::out_of_range
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantBreach;
  }
}

}  // namespace cascade::cli
