// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/analysis.hpp"
#include "cascade_ris/experiment.hpp"
#include "cascade_ris/validation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

using namespace cascade_ris;

namespace {

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::size_t workers{1};
  std::string out_dir{"."};
  bool plot{false};
};

struct NreqArgs {
  double target{0.0};
  std::size_t m{4};
  std::size_t k{4};
  std::size_t l{2};
  double power{10.0};
  double noise{1.0};
};

struct ValidateArgs {
  std::uint64_t seed{20241016};
  std::optional<std::size_t> trials;
  std::size_t workers{1};
  std::string out_dir{"."};
  std::vector<int> criteria;
};

int do_run(const RunArgs& a) {
  ExperimentConfig cfg;
  try {
    cfg = load_experiment_config(a.config);
  } catch (const ConfigError& e) {
    std::cerr << "config error at " << e.what() << "\n";
    return 2;
  }
  RunOverrides o;
  if (a.seed) o.seed = Seed{*a.seed};
  o.trials = a.trials;
  o.workers = a.workers;
  o.out_dir = a.out_dir;
  o.plot = a.plot;
  const auto out = run_experiment(cfg, o);
  std::cout << "wrote " << out.csv_path.string() << " (" << out.rows.size() << " rows)\n";
  if (out.plot_path) std::cout << "wrote " << out.plot_path->string() << "\n";
  std::cout << "wrote " << out.validation_report_path.string() << "\n";
  return 0;
}

int do_nreq(const NreqArgs& a) {
  const auto config = SystemConfig::uniform(a.m, a.k, a.l, 1, a.power, a.noise);
  config.validate();
  const double floor_bits = power_term_bits(config);
  if (!(a.target >= floor_bits)) {
    std::cerr << "infeasible: target " << format_number(a.target)
              << " bits is below the minimum attainable power term " << format_number(floor_bits)
              << " bits\n";
    return 3;
  }
  const auto s = n_required(a.target, config);
  std::cout << "N_req " << format_number(s.n_required) << "\n";
  std::cout << "N_req_ceil " << s.n_required_ceil << "\n";
  std::cout << "roundtrip_bits " << format_number(ec_high_snr_largeN_bits(config, s.n_required)) << "\n";
  return 0;
}

int do_validate(const ValidateArgs& a) {
  ValidationOptions o;
  o.seed = Seed{a.seed};
  o.trials = a.trials;
  o.workers = a.workers;
  o.scratch_dir = std::filesystem::path(a.out_dir) / "validate-scratch";
  ValidationReport report;
  for (const int id : a.criteria) {
    if (id < 1 || id > kCriterionCount) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
  }
  std::vector<int> ids = a.criteria;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  for (const int id : ids) {
    report.criteria.push_back(run_criterion(id, o));
    if (report.criteria.back().selected_variant) report.selected_variant = report.criteria.back().selected_variant;
    std::cout << summary_line(report.criteria.back()) << std::endl;
  }
  std::filesystem::remove_all(o.scratch_dir);
  const auto path = std::filesystem::path(a.out_dir) / "validation_report.txt";
  write_atomically(path, report.text());
  std::cout << "wrote " << path.string() << "\n";
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cascaded BD-RIS MIMO capacity: design, analysis and Monte Carlo runs"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run a Monte Carlo sweep described by a config file");
  run_cmd->add_option("--config", run.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--seed", run.seed, "master seed (overrides the config)");
  run_cmd->add_option("--trials", run.trials, "trials per point (overrides the config)")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--workers", run.workers, "worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out-dir", run.out_dir, "output directory");
  run_cmd->add_flag("--plot", run.plot, "also write an SVG plot");

  NreqArgs nreq;
  auto* nreq_cmd = app.add_subcommand("nreq", "elements per RIS needed for a target capacity");
  nreq_cmd->add_option("target", nreq.target, "target capacity [bits/s/Hz]")->required();
  nreq_cmd->add_option("M", nreq.m, "transmit antennas")->required()->check(CLI::PositiveNumber);
  nreq_cmd->add_option("K", nreq.k, "receive antennas")->required()->check(CLI::PositiveNumber);
  nreq_cmd->add_option("L", nreq.l, "cascaded RISs")->required()->check(CLI::PositiveNumber);
  nreq_cmd->add_option("P_t", nreq.power, "transmit power budget (linear)")->required()->check(CLI::PositiveNumber);
  nreq_cmd->add_option("--noise", nreq.noise, "noise variance")->check(CLI::PositiveNumber);

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "run the validation criteria and write a report");
  val_cmd->add_option("--seed", val.seed, "master seed");
  val_cmd->add_option("--trials", val.trials, "override every Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  val_cmd->add_option("--workers", val.workers, "worker threads")->check(CLI::PositiveNumber);
  val_cmd->add_option("--out-dir", val.out_dir, "output directory");
  val_cmd->add_option("--criterion", val.criteria, "run only these criteria (1-12)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return do_run(run);
    if (nreq_cmd->parsed()) return do_nreq(nreq);
    if (val_cmd->parsed()) return do_validate(val);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
