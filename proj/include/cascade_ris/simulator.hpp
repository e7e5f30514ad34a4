// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo ergodic capacity and parameter sweeps.
//
// Trial t of a run with master seed s draws its channels from
// Seed{derive_stream(s, t)}; every strategy at that trial index sees the same
// realization.  Per-trial capacities land in fixed slots and are reduced in
// trial order, so the worker count never changes a result bit.

#pragma once

#include "cascade_ris/channel.hpp"
#include "cascade_ris/optimizer.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cascade_ris {

enum class Strategy { UpaBd, SvdWfBd, UpaDiagProjected, RandomUnitary, RandomDiagonal, IdentityPhases };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// True for strategies whose precoder is uniform and whose surfaces are the
/// optimal BD-RIS design, i.e. the ones the analytic predictors describe.
bool has_analytic_prediction(Strategy s);

struct McEstimate {
  double mean_bits{0.0};
  double std_error{0.0};
  std::size_t trials{0};
  Seed seed{};
};

/// Seed of the channel realization used by trial `trial`.
Seed trial_seed(Seed master, std::size_t trial);

/// Capacity of one strategy on one realization.  Random baselines draw their
/// surfaces from substreams of the trial seed disjoint from the channel ones.
double strategy_capacity(const ChannelSet& channels, const SystemConfig& config, Strategy strategy,
                         Seed realization_seed, const SvdWfSettings& settings = {});

/// Runs fn(i) for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn);

/// Pairwise summation in index order.
double pairwise_sum(std::span<const double> values);

/// Per-trial capacities in trial order.
std::vector<double> trial_capacities(const SystemConfig& config, Strategy strategy,
                                     std::size_t trials, Seed seed, std::size_t workers = 1,
                                     const SvdWfSettings& settings = {});

McEstimate summarize(std::span<const double> samples, Seed seed);

McEstimate estimate_ec(const SystemConfig& config, Strategy strategy, std::size_t trials, Seed seed,
                       std::size_t workers = 1);

enum class SweepAxis { PowerDb, ElementsN, RisCountL };

std::string_view to_string(SweepAxis a);
std::optional<SweepAxis> parse_axis(std::string_view name);

/// One curve of a sweep: a strategy, optionally pinned to its own RIS count
/// (e.g. single RIS vs a two-RIS cascade on the same axis).
struct SweepSeries {
  Strategy strategy{Strategy::UpaBd};
  std::optional<std::size_t> ris_count;

  std::string label() const;
};

struct SweepSpec {
  SystemConfig base;
  SweepAxis axis{SweepAxis::PowerDb};
  std::vector<double> points;
  std::vector<SweepSeries> series;
  std::size_t trials{2000};
  Seed seed{1};

  void validate() const;
};

struct SweepRow {
  double axis_value{0.0};
  std::string series;
  bool valid{true};
  std::string note;
  McEstimate estimate;
  std::optional<double> ec_taylor;
  std::optional<double> ec_highsnr;
  std::optional<double> ec_large_n;
};

/// Configuration at one axis point.  PowerDb sets P_t = noise_var 10^(x/10);
/// ElementsN splits N total elements evenly, N/L per RIS; RisCountL repeats
/// the base per-RIS size L times.  Throws std::invalid_argument when the
/// point yields invalid dimensions.
SystemConfig config_at(const SystemConfig& base, SweepAxis axis, double value,
                       std::optional<std::size_t> ris_count);

/// One row per (point, series), point-major.  Invalid points are flagged and skipped.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers = 1);

}  // namespace cascade_ris
