// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/analysis.hpp"

#include "cascade_ris/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cascade_ris {

namespace {

double per_antenna_snr(const SystemConfig& config) {
  return config.power_budget / (static_cast<double>(config.tx_antennas) * config.noise_var);
}

WishartParams link_wishart(const SystemConfig& config, std::size_t l) {
  const auto [rows, cols] = config.link_shape(l);
  return {std::min(rows, cols), std::max(rows, cols), 0.0};
}

double large_n_slope(const SystemConfig& config) {
  const double mk = static_cast<double>(std::min(config.users, config.tx_antennas));
  const double m = static_cast<double>(config.tx_antennas);
  const double l = static_cast<double>(config.ris_count());
  return 2.0 * mk + m * (l - 1.0);
}

}  // namespace

std::string_view to_string(EcMethod m) {
  switch (m) {
    case EcMethod::Taylor: return "Taylor";
    case EcMethod::HighSnr: return "HighSnr";
    case EcMethod::HighSnrLargeN: return "HighSnrLargeN";
  }
  return "?";
}

std::string_view to_string(DigammaVariant v) {
  return v == DigammaVariant::HalfArgument ? "HalfArgument" : "FullArgument";
}

std::string_view to_string(RankRule r) {
  return r == RankRule::StreamRank ? "StreamRank" : "LinkRank";
}

double power_term_bits(const SystemConfig& config) {
  config.validate();
  return static_cast<double>(std::min(config.users, config.tx_antennas)) *
         std::log2(per_antenna_snr(config));
}

EcPrediction ec_taylor(const SystemConfig& config) {
  config.validate();
  const double a = per_antenna_snr(config);

  double m1 = 1.0;
  double m2 = 1.0;
  for (std::size_t l = 0; l < config.link_count(); ++l) {
    const auto w = link_wishart(config, l);
    m1 *= wishart_eig_moment(1, w);
    m2 *= wishart_eig_moment(2, w);
  }

  const double mean = a * m1;
  const double variance = a * a * (m2 - m1 * m1);
  const double correction = -variance / (2.0 * std::numbers::ln2 * (1.0 + mean) * (1.0 + mean));
  const std::size_t streams = config.stream_rank();

  EcPrediction p;
  p.method = EcMethod::Taylor;
  p.power_term = static_cast<double>(streams) * std::log2(1.0 + mean);
  p.per_link_terms.assign(streams, correction);
  p.value_bits = p.power_term + std::accumulate(p.per_link_terms.begin(), p.per_link_terms.end(), 0.0);
  return p;
}

EcPrediction ec_high_snr(const SystemConfig& config, DigammaVariant variant, RankRule rule) {
  config.validate();
  const std::size_t streams = config.stream_rank();

  EcPrediction p;
  p.method = EcMethod::HighSnr;
  p.digamma_variant = variant;
  p.power_term = power_term_bits(config);
  p.value_bits = p.power_term;
  for (std::size_t l = 0; l < config.link_count(); ++l) {
    const auto w = link_wishart(config, l);
    const std::size_t terms = rule == RankRule::LinkRank ? w.dim : std::min(w.dim, streams);
    const double nu = static_cast<double>(w.dof);
    double psi_sum = 0.0;
    for (std::size_t i = 1; i <= terms; ++i) {
      const double arg = nu - static_cast<double>(i) + 1.0;
      psi_sum += digamma(variant == DigammaVariant::HalfArgument ? 0.5 * arg : arg);
    }
    double term = psi_sum / std::numbers::ln2;
    if (variant == DigammaVariant::HalfArgument) term += static_cast<double>(terms);
    p.per_link_terms.push_back(term);
    p.value_bits += term;
  }
  return p;
}

double ec_high_snr_largeN_bits(const SystemConfig& config, double elements_per_ris) {
  if (!(elements_per_ris > 0)) throw std::invalid_argument("elements per RIS must be positive");
  return power_term_bits(config) + large_n_slope(config) * std::log2(elements_per_ris);
}

EcPrediction ec_high_snr_largeN(const SystemConfig& config) {
  config.validate();
  if (!config.equal_ris_sizes()) {
    throw std::invalid_argument("ec_high_snr_largeN: RIS sizes must be equal");
  }
  const double log_n = std::log2(static_cast<double>(config.ris_sizes.front()));
  const double mk = static_cast<double>(std::min(config.users, config.tx_antennas));
  const double m = static_cast<double>(config.tx_antennas);

  EcPrediction p;
  p.method = EcMethod::HighSnrLargeN;
  p.power_term = power_term_bits(config);
  p.per_link_terms.push_back(mk * log_n);
  for (std::size_t l = 1; l < config.ris_count(); ++l) p.per_link_terms.push_back(m * log_n);
  p.per_link_terms.push_back(mk * log_n);
  p.value_bits = ec_high_snr_largeN_bits(config, static_cast<double>(config.ris_sizes.front()));
  return p;
}

SizingResult n_required(double target_bits, const SystemConfig& config) {
  const double floor_bits = power_term_bits(config);
  if (!std::isfinite(target_bits) || target_bits < floor_bits) {
    throw std::invalid_argument("n_required: target below the power-only capacity " +
                                std::to_string(floor_bits) + " bits");
  }
  SizingResult out;
  out.target_capacity = target_bits;
  out.n_required = std::exp2((target_bits - floor_bits) / large_n_slope(config));
  const double nearest = std::round(out.n_required);
  const bool integral = std::abs(out.n_required - nearest) <= 1e-9 * std::max(1.0, nearest);
  out.n_required_ceil = static_cast<std::size_t>(integral ? nearest : std::ceil(out.n_required));
  return out;
}

double crossover_point(std::size_t ris_count) {
  if (ris_count < 2) throw std::invalid_argument("crossover_point: need at least two cascaded RISs");
  const double l = static_cast<double>(ris_count);
  return std::pow(l, l / (l - 1.0));
}

}  // namespace cascade_ris
