#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bwak/config.hpp"
#include "bwak/harness.hpp"
#include "bwak/report.hpp"

namespace bwak::cli {

namespace {

struct Options {
  std::string config_path;
  std::string out_dir;
  unsigned threads = 1;
  std::vector<std::string> overrides;
};

ExperimentConfig load(const Options& opts, const std::optional<std::string>& seed_env) {
  ExperimentConfig config = load_config(opts.config_path);
  if (seed_env) apply_override(config, "seed=" + *seed_env);
  for (const auto& o : opts.overrides) apply_override(config, o);
  if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
  return config;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int cmd_oracle(const Options& opts, const std::optional<std::string>& seed_env,
               std::ostream& out) {
  const ExperimentConfig config = load(opts, seed_env);
  out << oracle_json(config.instance, compute_gaps(config.instance)) << '\n';
  return kExitOk;
}

int cmd_run(const Options& opts, const std::optional<std::string>& seed_env, std::ostream& out) {
  const ExperimentConfig config = load(opts, seed_env);
  const std::filesystem::path dir = config.out_dir;
  std::filesystem::create_directories(dir);
  std::optional<std::filesystem::path> trace_dir;
  if (config.write_traces) trace_dir = dir;
  const ExperimentResult result = run_experiment(config, opts.threads, trace_dir);

  std::ostringstream csv;
  write_aggregate_csv(csv, result);
  write_file(dir / "aggregate.csv", csv.str());
  write_file(dir / "summary.json", summary_json(config, result) + "\n");
  out << "wrote " << (dir / "aggregate.csv").string() << " and "
      << (dir / "summary.json").string() << '\n';
  return kExitOk;
}

int cmd_compare(const Options& opts, const std::optional<std::string>& seed_env,
                std::ostream& out) {
  const ExperimentConfig config = load(opts, seed_env);
  const ExperimentResult result = run_experiment(config, opts.threads);
  out << "r* = " << format_number(result.oracle.optimum.value) << ", T = " << config.horizon
      << ", trials = " << config.trials << '\n';
  auto cell = [&out](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%14.4f", x);
    out << buf;
  };
  out << "policy";
  for (const char* h : {"regret_mean", "regret_std", "skips_mean", "skips_std", "costgap_mean"}) {
    out << std::setw(14) << h;
  }
  out << '\n';
  for (const auto& report : result.reports) {
    const SeriesPoint& last = report.series.back();
    out << std::left << std::setw(6) << to_string(report.policy) << std::right;
    cell(last.regret_mean);
    cell(last.regret_std);
    cell(last.skips_mean);
    cell(last.skips_std);
    cell(last.costgap_mean);
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& seed_env) {
  CLI::App app{"Bandits with anytime knapsacks: oracle, SUAK and one-phase-skip simulator",
               "bwak"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "experiment config file")->required();
    sub->add_option("--override", opts.overrides, "key=value applied after the config file");
  };
  auto* oracle = app.add_subcommand("oracle", "print r*, the optimal policy and gap report");
  add_common(oracle);
  auto* run_cmd = app.add_subcommand("run", "run trials, write aggregate CSV and summary JSON");
  add_common(run_cmd);
  run_cmd->add_option("--out", opts.out_dir, "output directory (overrides `out`)");
  run_cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
  auto* compare = app.add_subcommand("compare", "print final regret and skips per policy");
  add_common(compare);
  compare->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"bwak"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bwak: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (oracle->parsed()) return cmd_oracle(opts, seed_env, out);
    if (run_cmd->parsed()) return cmd_run(opts, seed_env, out);
    return cmd_compare(opts, seed_env, out);
  } catch (const ConfigError& e) {
    err << "bwak: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ConstraintViolation& e) {
    err << "bwak: " << e.what() << '\n';
    return kExitConstraintViolation;
  } catch (const std::exception& e) {
    err << "bwak: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace bwak::cli
