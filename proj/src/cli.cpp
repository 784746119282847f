#include "regretlab/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "regretlab/config.hpp"
#include "regretlab/csv.hpp"
#include "regretlab/harness.hpp"
#include "regretlab/selfcheck.hpp"

namespace regretlab {

namespace {

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;
  std::optional<std::size_t> budget;
  bool quiet = false;
};

void print_summary(const std::vector<SlopeSummaryRow>& rows, std::ostream& out) {
  fmt::print(out, "{:<20} {:<4} {:<7} {:>9} {:>9}  window\n", "algorithm", "kind", "agg", "slope",
             "rms");
  for (const SlopeSummaryRow& r : rows) {
    fmt::print(out, "{:<20} {:<4} {:<7} {:>9.4f} {:>9.4f}  [{}, {}]\n", r.algorithm, to_string(r.kind),
               to_string(r.aggregation), r.estimate.slope, r.estimate.residual_rms, r.estimate.n_lo,
               r.estimate.n_hi);
  }
}

int execute_suite(std::vector<ExperimentSpec> specs, const GlobalFlags& flags,
                  const std::string& out_dir, std::ostream& out, std::ostream& err) {
  for (ExperimentSpec& spec : specs) {
    if (flags.seed) spec.master_seed = *flags.seed;
    if (flags.budget) spec.budget = *flags.budget;
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      fmt::print(err, "error: [algorithm {}]: {}\n", spec.algorithm.label, e.what());
      return kExitConfigError;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult suite = run_suite(specs, flags.threads);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const SpecFailure& f : suite.failures) {
    fmt::print(err, "error: {} failed: {}\n", f.label, f.message);
  }
  try {
    write_outputs(suite, out_dir);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  }
  if (!flags.quiet) {
    print_summary(slope_summary(suite), out);
    fmt::print(out, "{} specs in {:.1f} s; CSVs written to {}\n", suite.runs.size(), seconds, out_dir);
  }
  return suite.failures.empty() ? kExitOk : kExitFailure;
}

int run_command(const std::string& config_path, const GlobalFlags& flags, const std::string& out_dir,
                std::ostream& out, std::ostream& err) {
  std::ifstream file(config_path);
  if (!file) {
    fmt::print(err, "error: cannot read {}\n", config_path);
    return kExitConfigError;
  }
  std::stringstream text;
  text << file.rdbuf();
  ParseOptions options;
  options.default_seed = flags.seed ? flags.seed : seed_from_environment();
  const ParsedConfig parsed = parse_config(text.str(), options);
  if (!parsed.ok()) {
    for (const ConfigError& e : parsed.errors) fmt::print(err, "{}: {}\n", config_path, e.format());
    return kExitConfigError;
  }
  return execute_suite(parsed.specs, flags, out_dir, out, err);
}

int slopes_command(const std::string& csv_path, double window_fraction, std::ostream& out,
                   std::ostream& err) {
  std::ifstream file(csv_path);
  if (!file) {
    fmt::print(err, "error: cannot read {}\n", csv_path);
    return kExitConfigError;
  }
  try {
    write_slope_summary(slopes_from_rows(read_regret_csv(file), window_fraction), out);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}: {}\n", csv_path, e.what());
    return kExitConfigError;
  }
  return kExitOk;
}

int validate_command(const GlobalFlags& flags, std::ostream& out) {
  const std::uint64_t seed = flags.seed.value_or(1);
  std::vector<CheckResult> checks = run_property_checks(seed);
  std::vector<CheckResult> noise_free = run_noise_free_checks(seed);
  checks.insert(checks.end(), noise_free.begin(), noise_free.end());
  for (const CheckResult& c : checks) {
    if (!flags.quiet || !c.passed) {
      fmt::print(out, "{} {} ({})\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
    }
  }
  return all_passed(checks) ? kExitOk : kExitFailure;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regret measurement for noisy black-box optimizers on the noisy sphere", "regretlab"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Master seed (default: config, then REGRETLAB_SEED)");
  app.add_option("--threads", flags.threads, "Worker threads for replicates (0 = all cores)")
      ->capture_default_str();
  app.add_option("--budget", flags.budget, "Override the evaluation budget of every spec")
      ->check(CLI::Range(std::size_t{100}, std::numeric_limits<std::size_t>::max()));
  app.add_flag("--quiet", flags.quiet, "Print errors and failures only");

  std::string config_path;
  std::string out_dir = "results";
  auto* run = app.add_subcommand("run", "Run the suite described by a config file");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();

  std::string fig1_out = "results-fig1";
  auto* fig1 = app.add_subcommand("fig1", "Run the built-in five-algorithm reproduction suite");
  fig1->add_option("--out", fig1_out, "Output directory")->capture_default_str();

  std::string csv_path;
  double window_fraction = 0.01;
  auto* slopes = app.add_subcommand("slopes", "Recompute the slope summary from a regret CSV");
  slopes->add_option("csv", csv_path, "regret.csv written by run or fig1")->required();
  slopes->add_option("--window-fraction", window_fraction, "Fit window starts at this fraction of the budget")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Run invariant and oracle self-checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfigError;
  }

  try {
    if (run->parsed()) return run_command(config_path, flags, out_dir, out, err);
    if (fig1->parsed()) {
      const std::uint64_t seed = flags.seed.value_or(seed_from_environment().value_or(1));
      return execute_suite(fig1_suite(seed), flags, fig1_out, out, err);
    }
    if (slopes->parsed()) return slopes_command(csv_path, window_fraction, out, err);
    if (validate->parsed()) return validate_command(flags, out);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  }
  return kExitConfigError;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace regretlab
