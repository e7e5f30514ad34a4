// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance [--criterion N]... [--seed S] [--trials T] [--workers W]

#include "cascade_ris/validation.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"cascade-ris acceptance criteria"};
  std::vector<int> ids;
  std::uint64_t seed = cascade_ris::ValidationOptions{}.seed.value;
  std::optional<std::size_t> trials;
  std::size_t workers = 1;
  app.add_option("--criterion", ids, "criteria to run (default: all)")
      ->check(CLI::Range(1, cascade_ris::kCriterionCount));
  app.add_option("--seed", seed, "master seed");
  app.add_option("--trials", trials, "override Monte Carlo sample counts");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  cascade_ris::ValidationOptions opts;
  opts.seed = cascade_ris::Seed{seed};
  opts.trials = trials;
  opts.workers = workers;
  if (ids.empty()) {
    for (int i = 1; i <= cascade_ris::kCriterionCount; ++i) ids.push_back(i);
  }

  bool all = true;
  for (const int id : ids) {
    const auto r = cascade_ris::run_criterion(id, opts);
    std::cout << cascade_ris::summary_line(r) << "\n";
    for (const auto& d : r.details) std::cout << "       " << d << "\n";
    for (const auto& w : r.warnings) std::cout << "       warning: " << w << "\n";
    std::cout.flush();
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
