// SPDX-License-Identifier: Apache-2.0
//
// Joint design of cascaded BD-RIS phase matrices and the transmit precoder.
//
// Every surface acts as a mode-matching layer: Phi_i = V_i U_{i-1}^H maps the
// left singular vectors of the incoming link onto the right singular vectors
// of the outgoing link, so the k-th strongest modes of all links line up and
// the cascade gain of stream k is the product of the k-th eigenvalues.

#pragma once

#include "cascade_ris/channel.hpp"

#include <cstddef>
#include <vector>

namespace cascade_ris {

enum class PrecoderKind { Upa, General };

/// Transmit covariance Q with Tr(Q) <= trace_budget.
struct Precoder {
  PrecoderKind kind{PrecoderKind::Upa};
  ComplexMatrix covariance;
  double trace_budget{0.0};

  /// (power_budget / tx_antennas) I.
  static Precoder uniform(std::size_t tx_antennas, double power_budget);
};

struct CapacityReport {
  double capacity_bits{0.0};
  std::size_t rank{0};
  /// Effective per-stream eigenvalues of H_cas Q H_cas^H, strongest first.
  std::vector<double> stream_gains;
  double noise_var{1.0};
  std::size_t iterations{0};
  bool converged{true};
  /// Capacity after each alternation (SVD-WF only).
  std::vector<double> capacity_trace;
};

struct SvdWfSettings {
  double epsilon{1e-6};
  std::size_t max_iterations{100};

  void validate() const;
};

struct Design {
  RisConfiguration ris;
  Precoder precoder;
  CapacityReport report;
};

/// Closed-form design under uniform power allocation.  The reported capacity
/// is sum_k log2(1 + (P_t/M) prod_l lambda_lk / noise_var) over the first
/// R = min_l rank(H_l) aligned modes.
Design optimize_upa(const ChannelSet& channels, const SystemConfig& config);

/// Alternating design with eigenmode precoding and water-filling.  Surfaces
/// 2..L are fixed one-shot; Phi_1 and Q alternate from Q_0 = I_M, Phi_1 = I.
/// Non-convergence is reported through report.converged, never thrown.
Design optimize_svdwf(const ChannelSet& channels, const SystemConfig& config,
                      const SvdWfSettings& settings = {});

/// Tr(H_cas Q H_cas^H).
double trace_objective(const ChannelSet& channels, const RisConfiguration& ris,
                       const Precoder& precoder);

/// Nearest unit-modulus diagonal matrix in Frobenius norm: Phi_jj / |Phi_jj|,
/// with 1 where the diagonal entry vanishes.
ComplexMatrix project_diagonal(const ComplexMatrix& phi);
RisConfiguration project_diagonal(const RisConfiguration& ris);

/// Exact log-det capacity of an arbitrary configuration.
CapacityReport evaluate(const ChannelSet& channels, const RisConfiguration& ris,
                        const Precoder& precoder, const SystemConfig& config);

}  // namespace cascade_ris
