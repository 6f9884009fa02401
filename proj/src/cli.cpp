#include "stepmp/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stepmp/maximizer.hpp"
#include "stepmp/pursuit.hpp"
#include "stepmp/report.hpp"
#include "stepmp/simulate.hpp"
#include "stepmp/verify.hpp"

namespace stepmp::cli {
namespace {

using nlohmann::json;

struct PursuitFlags {
  long max_iter = 10;
  double residual_eps = 0.0;
  double coef_eps = 0.0;
  std::optional<double> shift;

  PursuitConfig config() const { return {max_iter, residual_eps, coef_eps, shift}; }
};

void add_pursuit_flags(CLI::App& cmd, PursuitFlags& flags) {
  cmd.add_option("--max-iter", flags.max_iter, "Maximum number of pursuit iterations")
      ->capture_default_str();
  cmd.add_option("--residual-eps", flags.residual_eps, "Stop once the residual norm is below")
      ->capture_default_str();
  cmd.add_option("--coef-eps", flags.coef_eps, "Stop when the selected |coefficient| is below")
      ->capture_default_str();
  cmd.add_option("--shift", flags.shift, "Constant added to the data before the pursuit");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

json config_json(const PursuitConfig& config) {
  json doc = {{"max_iterations", config.max_iterations},
              {"residual_epsilon", config.residual_epsilon},
              {"coefficient_epsilon", config.coefficient_epsilon},
              {"pre_shift", nullptr}};
  if (config.pre_shift) doc["pre_shift"] = *config.pre_shift;
  return doc;
}

struct ApproxArgs {
  std::string input;
  std::string column = "0";
  PursuitFlags pursuit;
  std::string out;
  std::string csv_out;
};

int cmd_approx(const ApproxArgs& args, std::ostream& out) {
  const CsvTable table = read_csv(args.input);
  const ScalarSequence seq(table.numeric_column(args.column));
  const PursuitConfig config = args.pursuit.config();

  const auto start = std::chrono::steady_clock::now();
  const GreedyExpansion expansion = run_pursuit(seq, config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const RunReport report = make_run_report(expansion, config, args.input, args.column, seconds);
  emit(args.out, to_json(report).dump(2) + "\n", out);
  if (!args.csv_out.empty()) {
    write_file_atomic(args.csv_out, reconstruction_csv(seq.vector(), report.reconstruction, {}));
  }
  return kSuccess;
}

struct SimulateArgs {
  std::string preset;
  std::optional<long> length;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  const Preset p = preset(args.preset);
  if (args.length && *args.length < 1) {
    err << "error: --T must be at least 1\n";
    return kUsageError;
  }
  const std::size_t T = args.length ? static_cast<std::size_t>(*args.length) : p.default_length;
  const SimulationOutput sim = simulate_preset(p, T, args.seed);
  std::ostringstream csv;
  csv << "t,value,state,true_mean\n";
  for (std::size_t i = 0; i < T; ++i) {
    csv << (i + 1) << ',' << format_real(sim.values[i]) << ',';
    if (!sim.states.empty()) csv << sim.states[i];
    csv << ',' << format_real(sim.true_means[i]) << '\n';
  }
  emit(args.out, csv.str(), out);
  return kSuccess;
}

struct CompareArgs {
  std::string input;
  std::string column = "value";
  std::string truth_column = "true_mean";
  PursuitFlags pursuit{11};
  int k = 2;
  std::uint64_t seed = 1;
  std::string out;
  std::string csv_out;
};

int cmd_compare(const CompareArgs& args, std::ostream& out) {
  const CsvTable table = read_csv(args.input);
  const ScalarSequence values(table.numeric_column(args.column));
  const ScalarSequence truth(table.numeric_column(args.truth_column));
  const PursuitConfig config = args.pursuit.config();

  const GreedyExpansion expansion = run_pursuit(values, config);
  const ScalarSequence recon = reconstruct(expansion);
  const KMeansResult clusters = kmeans_1d(values, args.k, args.seed);
  const std::vector<double> cluster_path = cluster_mean_path(clusters);

  json doc = {{"kind", "compare"},
              {"input", {{"path", args.input}, {"column", args.column},
                         {"truth_column", args.truth_column}, {"length", values.size()}}},
              {"config", config_json(config)},
              {"iterations", expansion.terms.size()},
              {"mse_pursuit", mse(recon, truth)},
              {"mse_raw", mse(values, truth)},
              {"breakpoints", breakpoints(expansion)},
              {"kmeans",
               {{"k", args.k},
                {"seed", args.seed},
                {"centers", clusters.centers},
                {"assignments", clusters.assignments},
                {"iterations", clusters.iterations},
                {"mse", mse(cluster_path, truth.values())}}}};
  emit(args.out, doc.dump(2) + "\n", out);
  if (!args.csv_out.empty()) {
    write_file_atomic(args.csv_out,
                      reconstruction_csv(values.vector(), recon.vector(), truth.vector()));
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string suite;
  verify::Options options;
  std::string out;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const verify::Result result = verify::run_suite(args.suite, args.options);
  json checks = json::array();
  std::ostringstream summary;
  for (const auto& check : result.checks) {
    checks.push_back({{"name", check.name},
                      {"observed", check.observed},
                      {"tolerance", check.tolerance},
                      {"passed", check.passed}});
    summary << (check.passed ? "PASS " : "FAIL ") << result.suite << ": " << check.name
            << " observed=" << format_real(check.observed)
            << " tolerance=" << format_real(check.tolerance) << '\n';
  }
  const auto& o = result.options;
  json doc = {{"kind", "verify"},
              {"suite", result.suite},
              {"options", {{"seed", o.seed}, {"trials", o.trials}, {"n", o.max_n},
                           {"grid_step", o.grid_step}, {"xi_step", o.xi_step},
                           {"xi_max", o.xi_max}, {"iterations", o.iterations}}},
              {"checks", checks},
              {"passed", result.passed()},
              {"seconds", result.seconds}};
  if (args.out.empty() || args.out == "-") {
    out << summary.str() << doc.dump(2) << '\n';
  } else {
    out << summary.str();
    write_file_atomic(args.out, doc.dump(2) + "\n");
  }
  return result.passed() ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Step-function approximation by matching pursuit over rectangular windows",
               "stepmp"};
  app.require_subcommand(1);

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "Run the pursuit on one CSV column");
  approx_cmd->add_option("input", approx.input, "Input CSV")->required();
  approx_cmd->add_option("--column", approx.column, "Column name or zero-based index")
      ->capture_default_str();
  add_pursuit_flags(*approx_cmd, approx.pursuit);
  approx_cmd->add_option("--out", approx.out, "Report path (default: stdout)");
  approx_cmd->add_option("--csv-out", approx.csv_out, "Reconstruction CSV for plotting");

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Generate a preset series as CSV");
  simulate_cmd->add_option("preset", simulate.preset, "Preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  simulate_cmd->add_option("--T", simulate.length, "Series length (default: preset length)");
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed")->capture_default_str();
  simulate_cmd->add_option("--out", simulate.out, "Output CSV (default: stdout)");

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Pursuit and k-means against a known mean path");
  compare_cmd->add_option("input", compare.input, "CSV with value and true_mean columns")
      ->required();
  compare_cmd->add_option("--column", compare.column, "Value column")->capture_default_str();
  compare_cmd->add_option("--truth-column", compare.truth_column, "True mean column")
      ->capture_default_str();
  add_pursuit_flags(*compare_cmd, compare.pursuit);
  compare_cmd->add_option("--k", compare.k, "Number of k-means clusters")->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed, "k-means seed")->capture_default_str();
  compare_cmd->add_option("--out", compare.out, "Report path (default: stdout)");
  compare_cmd->add_option("--csv-out", compare.csv_out, "Reconstruction CSV for plotting");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a numerical verification sweep");
  verify_cmd->add_option("suite", verify_args.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--seed", verify_args.options.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--trials", verify_args.options.trials, "Random trials")
      ->capture_default_str();
  verify_cmd->add_option("--n", verify_args.options.max_n,
                         "Sequence length bound (0: suite default)");
  verify_cmd->add_option("--grid-step", verify_args.options.grid_step, "t and u grid spacing")
      ->capture_default_str();
  verify_cmd->add_option("--xi-step", verify_args.options.xi_step, "Modulation grid spacing")
      ->capture_default_str();
  verify_cmd->add_option("--iterations", verify_args.options.iterations,
                         "Pursuit iterations (energy suite)")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_args.out, "Report path (default: stdout)");

  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "stepmp");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*approx_cmd) return cmd_approx(approx, out);
    if (*simulate_cmd) return cmd_simulate(simulate, out, err);
    if (*compare_cmd) return cmd_compare(compare, out);
    if (*verify_cmd) {
      if (verify_args.options.trials < 1 || !(verify_args.options.grid_step > 0.0) ||
          !(verify_args.options.xi_step > 0.0)) {
        err << "error: --trials, --grid-step and --xi-step must be positive\n";
        return kUsageError;
      }
      return cmd_verify(verify_args, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace stepmp::cli
