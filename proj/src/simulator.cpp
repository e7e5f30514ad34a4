// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/simulator.hpp"

#include "cascade_ris/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace cascade_ris {

namespace {

// Surface draws use stream indices far above the link indices 0..L.
constexpr std::uint64_t kSurfaceStreamBase = 1ULL << 32;

RisConfiguration random_unitary_surfaces(const SystemConfig& config, Seed seed) {
  RisConfiguration r;
  for (std::size_t l = 0; l < config.ris_count(); ++l) {
    r.phases.push_back(haar_unitary(config.ris_sizes[l], derive_stream(seed, kSurfaceStreamBase + l)));
  }
  return r;
}

RisConfiguration random_diagonal_surfaces(const SystemConfig& config, Seed seed) {
  RisConfiguration r;
  for (std::size_t l = 0; l < config.ris_count(); ++l) {
    std::mt19937_64 engine(derive_stream(seed, kSurfaceStreamBase + l));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const auto n = static_cast<Eigen::Index>(config.ris_sizes[l]);
    ComplexMatrix phi = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) phi(j, j) = std::polar(1.0, angle(engine));
    r.phases.push_back(std::move(phi));
  }
  return r;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::UpaBd: return "UpaBd";
    case Strategy::SvdWfBd: return "SvdWfBd";
    case Strategy::UpaDiagProjected: return "UpaDiagProjected";
    case Strategy::RandomUnitary: return "RandomUnitary";
    case Strategy::RandomDiagonal: return "RandomDiagonal";
    case Strategy::IdentityPhases: return "IdentityPhases";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const auto s : {Strategy::UpaBd, Strategy::SvdWfBd, Strategy::UpaDiagProjected,
                       Strategy::RandomUnitary, Strategy::RandomDiagonal, Strategy::IdentityPhases}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool has_analytic_prediction(Strategy s) { return s == Strategy::UpaBd; }

Seed trial_seed(Seed master, std::size_t trial) { return Seed{derive_stream(master, trial)}; }

double strategy_capacity(const ChannelSet& channels, const SystemConfig& config, Strategy strategy,
                         Seed realization_seed, const SvdWfSettings& settings) {
  const auto upa = Precoder::uniform(config.tx_antennas, config.power_budget);
  switch (strategy) {
    case Strategy::UpaBd:
      return optimize_upa(channels, config).report.capacity_bits;
    case Strategy::SvdWfBd:
      return optimize_svdwf(channels, config, settings).report.capacity_bits;
    case Strategy::UpaDiagProjected: {
      const auto design = optimize_upa(channels, config);
      return evaluate(channels, project_diagonal(design.ris), upa, config).capacity_bits;
    }
    case Strategy::RandomUnitary:
      return evaluate(channels, random_unitary_surfaces(config, realization_seed), upa, config)
          .capacity_bits;
    case Strategy::RandomDiagonal:
      return evaluate(channels, random_diagonal_surfaces(config, realization_seed), upa, config)
          .capacity_bits;
    case Strategy::IdentityPhases:
      return evaluate(channels, RisConfiguration::identity(config), upa, config).capacity_bits;
  }
  throw std::invalid_argument("unknown strategy");
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (const double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> trial_capacities(const SystemConfig& config, Strategy strategy,
                                     std::size_t trials, Seed seed, std::size_t workers,
                                     const SvdWfSettings& settings) {
  config.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<double> out(trials);
  parallel_for(trials, workers, [&](std::size_t t) {
    const Seed s = trial_seed(seed, t);
    const auto channels = generate_channels(config, s);
    out[t] = strategy_capacity(channels, config, strategy, s, settings);
  });
  return out;
}

McEstimate summarize(std::span<const double> samples, Seed seed) {
  if (samples.empty()) throw std::invalid_argument("summarize: no samples");
  McEstimate e;
  e.trials = samples.size();
  e.seed = seed;
  const double n = static_cast<double>(samples.size());
  e.mean_bits = pairwise_sum(samples) / n;
  if (samples.size() > 1) {
    std::vector<double> sq(samples.size());
    std::transform(samples.begin(), samples.end(), sq.begin(),
                   [&](double x) { return (x - e.mean_bits) * (x - e.mean_bits); });
    const double var = pairwise_sum(sq) / (n - 1.0);
    e.std_error = std::sqrt(var / n);
  }
  return e;
}

McEstimate estimate_ec(const SystemConfig& config, Strategy strategy, std::size_t trials, Seed seed,
                       std::size_t workers) {
  const auto samples = trial_capacities(config, strategy, trials, seed, workers);
  return summarize(samples, seed);
}

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::PowerDb: return "PowerDb";
    case SweepAxis::ElementsN: return "ElementsN";
    case SweepAxis::RisCountL: return "RisCountL";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  for (const auto a : {SweepAxis::PowerDb, SweepAxis::ElementsN, SweepAxis::RisCountL}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::string SweepSeries::label() const {
  std::string s(to_string(strategy));
  if (ris_count) s += "/L=" + std::to_string(*ris_count);
  return s;
}

void SweepSpec::validate() const {
  base.validate();
  if (points.empty()) throw std::invalid_argument("sweep: points must be nonempty");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) {
      throw std::invalid_argument("sweep: points must be strictly increasing");
    }
  }
  if (series.empty()) throw std::invalid_argument("sweep: at least one series is required");
  for (const auto& s : series) {
    if (s.ris_count && *s.ris_count < 1) throw std::invalid_argument("sweep: ris_count must be >= 1");
    if (s.ris_count && axis == SweepAxis::RisCountL) {
      throw std::invalid_argument("sweep: series may not pin ris_count on a RisCountL axis");
    }
  }
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
}

SystemConfig config_at(const SystemConfig& base, SweepAxis axis, double value,
                       std::optional<std::size_t> ris_count) {
  SystemConfig c = base;
  const std::size_t l = ris_count.value_or(base.ris_count());
  if (l < 1) throw std::invalid_argument("RIS count must be >= 1");
  if (l != base.ris_count()) c.ris_sizes.assign(l, base.ris_sizes.front());

  switch (axis) {
    case SweepAxis::PowerDb:
      if (!std::isfinite(value)) throw std::invalid_argument("power point must be finite");
      c.power_budget = base.noise_var * std::pow(10.0, value / 10.0);
      break;
    case SweepAxis::ElementsN: {
      if (!(value >= 1) || value != std::floor(value)) {
        throw std::invalid_argument("element count must be a positive integer");
      }
      const auto per_ris = static_cast<std::size_t>(value) / l;
      if (per_ris < 1) {
        throw std::invalid_argument("N/L < 1 at N=" + std::to_string(static_cast<long long>(value)) +
                                    ", L=" + std::to_string(l));
      }
      c.ris_sizes.assign(l, per_ris);
      break;
    }
    case SweepAxis::RisCountL: {
      if (ris_count) throw std::invalid_argument("RIS count is the sweep axis; series may not pin it");
      if (!(value >= 1) || value != std::floor(value)) {
        throw std::invalid_argument("RIS count must be a positive integer");
      }
      c.ris_sizes.assign(static_cast<std::size_t>(value), base.ris_sizes.front());
      break;
    }
  }
  c.validate();
  return c;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.points.size() * spec.series.size());
  for (const double x : spec.points) {
    for (const auto& series : spec.series) {
      SweepRow row;
      row.axis_value = x;
      row.series = series.label();
      SystemConfig config;
      try {
        config = config_at(spec.base, spec.axis, x, series.ris_count);
      } catch (const std::invalid_argument& e) {
        row.valid = false;
        row.note = e.what();
        rows.push_back(std::move(row));
        continue;
      }
      row.estimate = estimate_ec(config, series.strategy, spec.trials, spec.seed, workers);
      if (has_analytic_prediction(series.strategy)) {
        row.ec_taylor = ec_taylor(config).value_bits;
        row.ec_highsnr = ec_high_snr(config).value_bits;
        if (config.equal_ris_sizes()) row.ec_large_n = ec_high_snr_largeN(config).value_bits;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace cascade_ris
