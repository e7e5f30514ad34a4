// SPDX-License-Identifier: Apache-2.0
//
// End-to-end validation: exact algebraic identities of the optimal design,
// Monte Carlo accuracy of the analytic predictors, sizing rules and run
// determinism.  Each criterion is self-contained and seeded.

#pragma once

#include "cascade_ris/analysis.hpp"
#include "cascade_ris/channel.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cascade_ris {

inline constexpr int kCriterionCount = 12;

struct ValidationOptions {
  Seed seed{20241016};
  /// Overrides every Monte Carlo trial count; below the nominal count the
  /// criterion carries an insufficient-sample warning.
  std::optional<std::size_t> trials;
  std::size_t workers{1};
  /// Scratch space for the determinism run; a temporary directory when empty.
  std::filesystem::path scratch_dir;
};

struct CriterionResult {
  int id{0};
  std::string title;
  bool passed{false};
  std::vector<std::string> details;
  std::vector<std::string> warnings;
  std::optional<DigammaVariant> selected_variant;
};

struct ValidationReport {
  std::vector<CriterionResult> criteria;
  std::optional<DigammaVariant> selected_variant;

  bool all_passed() const;
  std::string text() const;
};

std::string criterion_title(int id);

/// Runs criterion `id` in 1..kCriterionCount.
CriterionResult run_criterion(int id, const ValidationOptions& options);

/// Runs the given criteria (all when empty) in order.
ValidationReport run_validation(const ValidationOptions& options, std::span<const int> ids = {});

/// One "[PASS] C01 ..." / "[FAIL] C01 ..." line.
std::string summary_line(const CriterionResult& r);

}  // namespace cascade_ris
