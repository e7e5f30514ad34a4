// SPDX-License-Identifier: Apache-2.0
//
// Analytic ergodic-capacity predictors for optimally configured cascades with
// uniform power allocation under iid CN(0, 1) fading, plus RIS sizing and the
// single-vs-cascade crossover law.
//
// All predictors use the per-antenna SNR a = P_t / (M noise_var).

#pragma once

#include "cascade_ris/channel.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace cascade_ris {

enum class EcMethod { Taylor, HighSnr, HighSnrLargeN };

/// Argument of the digamma terms in the expected Wishart log-determinant:
/// (nu - i + 1) / 2 together with a +R_l bit offset (the printed form), or
/// nu - i + 1 with no offset (the complex-Wishart identity).
enum class DigammaVariant { HalfArgument, FullArgument };

/// How many eigenvalues of each link enter the high-SNR log-determinant.
/// StreamRank uses the R = min over the chain aligned modes that actually
/// carry data; LinkRank uses every nonzero eigenvalue of H_l.
enum class RankRule { StreamRank, LinkRank };

inline constexpr DigammaVariant kDefaultDigammaVariant = DigammaVariant::FullArgument;

std::string_view to_string(EcMethod m);
std::string_view to_string(DigammaVariant v);
std::string_view to_string(RankRule r);

struct EcPrediction {
  double value_bits{0.0};
  EcMethod method{EcMethod::Taylor};
  /// Transmit-power contribution.  Taylor: R log2(1 + a M_1) (the Jensen
  /// term); high-SNR forms: min(K, M) log2(a).
  double power_term{0.0};
  /// Remaining contributions, summing to value_bits - power_term.  Taylor:
  /// one second-order correction per stream; high-SNR forms: one entry per link.
  std::vector<double> per_link_terms;
  std::optional<DigammaVariant> digamma_variant;
};

struct SizingResult {
  double n_required{1.0};
  std::size_t n_required_ceil{1};
  double target_capacity{0.0};
};

/// Second-order Taylor expansion of E[log2(1 + a prod_l lambda_l)] per stream,
/// with the product moments M_n = prod_l E[lambda_l^n] of uniformly chosen
/// Wishart eigenvalues, summed over R = stream_rank() streams.
EcPrediction ec_taylor(const SystemConfig& config);

/// High-SNR ergodic capacity from expected Wishart log-determinants.
EcPrediction ec_high_snr(const SystemConfig& config,
                         DigammaVariant variant = kDefaultDigammaVariant,
                         RankRule rule = RankRule::StreamRank);

/// Large-N simplification; requires equal RIS sizes.
EcPrediction ec_high_snr_largeN(const SystemConfig& config);

/// Same closed form with a continuous per-RIS element count.
double ec_high_snr_largeN_bits(const SystemConfig& config, double elements_per_ris);

/// Elements per RIS so the large-N prediction reaches target_bits.  Only M, K,
/// L, P_t and noise_var of the configuration are used.
SizingResult n_required(double target_bits, const SystemConfig& config);

/// min(K, M) log2(a): the pure-MIMO high-SNR capacity without RIS gain.
double power_term_bits(const SystemConfig& config);

/// Total element count N where a single N-element RIS and L cascaded
/// N/L-element RISs have equal array gain: L^{L/(L-1)}.
double crossover_point(std::size_t ris_count);

}  // namespace cascade_ris
