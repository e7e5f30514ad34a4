// SPDX-License-Identifier: Apache-2.0
//
// Link configuration, Rayleigh channel realizations and cascade composition.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cascade_ris {

using ComplexMatrix = Eigen::MatrixXcd;

struct Seed {
  std::uint64_t value{0};
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Counter-based substream key: a pure hash of (seed, index).
std::uint64_t derive_stream(Seed seed, std::uint64_t index);

/// Link dimensions and budget.  Link l (0..L) maps N_l -> N_{l+1} with
/// N_0 = tx_antennas and N_{L+1} = users.
struct SystemConfig {
  std::size_t tx_antennas{4};
  std::size_t users{4};
  std::vector<std::size_t> ris_sizes{4, 4};
  double power_budget{10.0};
  double noise_var{1.0};

  std::size_t ris_count() const { return ris_sizes.size(); }
  std::size_t link_count() const { return ris_sizes.size() + 1; }

  /// (rows, cols) of H_l.
  std::pair<std::size_t, std::size_t> link_shape(std::size_t l) const;

  /// Upper bound on the number of spatial streams: the smallest dimension in the chain.
  std::size_t stream_rank() const;

  bool equal_ris_sizes() const;

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;

  static SystemConfig uniform(std::size_t tx, std::size_t users, std::size_t ris_count,
                              std::size_t elements_per_ris, double power_budget,
                              double noise_var = 1.0);
};

/// H_0 ... H_L of one fading realization.
struct ChannelSet {
  std::vector<ComplexMatrix> links;

  std::size_t ris_count() const { return links.empty() ? 0 : links.size() - 1; }
};

/// Phi_1 ... Phi_L.
struct RisConfiguration {
  std::vector<ComplexMatrix> phases;

  static RisConfiguration identity(const SystemConfig& config);

  /// ||Phi Phi^H - I||_F <= tol for every surface.
  bool is_unitary(double tol = 1e-8) const;
};

bool is_unitary(const ComplexMatrix& m, double tol = 1e-8);

/// rows x cols matrix of iid CN(0, 1) entries drawn from one substream.
ComplexMatrix complex_gaussian(std::size_t rows, std::size_t cols, std::uint64_t stream);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix, R-diagonal phases removed).
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t stream);

/// H_l drawn from substream derive_stream(seed, l), so realizations of the
/// first links do not depend on how many links follow.
ChannelSet generate_channels(const SystemConfig& config, Seed seed);

/// Throws std::invalid_argument naming the offending link when the channel
/// set does not match the configuration.
void check_channels(const ChannelSet& channels, const SystemConfig& config);

/// H_L Phi_L H_{L-1} ... Phi_1 H_0, a users x tx_antennas matrix.
ComplexMatrix compose_cascade(const ChannelSet& channels, const RisConfiguration& ris);

}  // namespace cascade_ris
