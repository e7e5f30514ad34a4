// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/channel.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cascade_ris {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::string stage_error(std::size_t stage, const std::string& what) {
  std::ostringstream msg;
  msg << "stage " << stage << ": " << what;
  return msg.str();
}

}  // namespace

std::uint64_t derive_stream(Seed seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed.value) ^ splitmix64(index * kGolden + 1));
}

std::pair<std::size_t, std::size_t> SystemConfig::link_shape(std::size_t l) const {
  if (l > ris_sizes.size()) throw std::out_of_range("link index out of range");
  const std::size_t in = l == 0 ? tx_antennas : ris_sizes[l - 1];
  const std::size_t out = l == ris_sizes.size() ? users : ris_sizes[l];
  return {out, in};
}

std::size_t SystemConfig::stream_rank() const {
  std::size_t r = std::min(tx_antennas, users);
  for (const auto n : ris_sizes) r = std::min(r, n);
  return r;
}

bool SystemConfig::equal_ris_sizes() const {
  return std::adjacent_find(ris_sizes.begin(), ris_sizes.end(), std::not_equal_to<>()) ==
         ris_sizes.end();
}

void SystemConfig::validate() const {
  if (tx_antennas < 1) throw std::invalid_argument("config: tx_antennas must be >= 1");
  if (users < 1) throw std::invalid_argument("config: users must be >= 1");
  if (ris_sizes.empty()) throw std::invalid_argument("config: at least one RIS is required");
  for (std::size_t l = 0; l < ris_sizes.size(); ++l) {
    if (ris_sizes[l] < 1) {
      throw std::invalid_argument("config: ris_sizes[" + std::to_string(l) + "] must be >= 1");
    }
  }
  if (!(power_budget > 0) || !std::isfinite(power_budget)) {
    throw std::invalid_argument("config: power_budget must be positive");
  }
  if (!(noise_var > 0) || !std::isfinite(noise_var)) {
    throw std::invalid_argument("config: noise_var must be positive");
  }
}

SystemConfig SystemConfig::uniform(std::size_t tx, std::size_t users, std::size_t ris_count,
                                   std::size_t elements_per_ris, double power_budget,
                                   double noise_var) {
  SystemConfig c;
  c.tx_antennas = tx;
  c.users = users;
  c.ris_sizes.assign(ris_count, elements_per_ris);
  c.power_budget = power_budget;
  c.noise_var = noise_var;
  c.validate();
  return c;
}

RisConfiguration RisConfiguration::identity(const SystemConfig& config) {
  RisConfiguration r;
  for (const auto n : config.ris_sizes) {
    const auto dim = static_cast<Eigen::Index>(n);
    r.phases.push_back(ComplexMatrix::Identity(dim, dim));
  }
  return r;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.rows())).norm() <= tol;
}

bool RisConfiguration::is_unitary(double tol) const {
  return std::all_of(phases.begin(), phases.end(),
                     [tol](const ComplexMatrix& p) { return cascade_ris::is_unitary(p, tol); });
}

ComplexMatrix complex_gaussian(std::size_t rows, std::size_t cols, std::uint64_t stream) {
  std::mt19937_64 engine(stream);
  // Real and imaginary parts N(0, 1/2) each, so E|h|^2 = 1.
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix h(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      const double re = normal(engine);
      const double im = normal(engine);
      h(r, c) = {re, im};
    }
  }
  return h;
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t stream) {
  const ComplexMatrix g = complex_gaussian(n, n, stream);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const auto d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0) q.col(k) *= d / mag;
  }
  return q;
}

ChannelSet generate_channels(const SystemConfig& config, Seed seed) {
  config.validate();
  ChannelSet set;
  set.links.reserve(config.link_count());
  for (std::size_t l = 0; l < config.link_count(); ++l) {
    const auto [rows, cols] = config.link_shape(l);
    set.links.push_back(complex_gaussian(rows, cols, derive_stream(seed, l)));
  }
  return set;
}

void check_channels(const ChannelSet& channels, const SystemConfig& config) {
  if (channels.links.size() != config.link_count()) {
    throw std::invalid_argument("channel set has " + std::to_string(channels.links.size()) +
                                " links, configuration needs " +
                                std::to_string(config.link_count()));
  }
  for (std::size_t l = 0; l < config.link_count(); ++l) {
    const auto [rows, cols] = config.link_shape(l);
    const auto& h = channels.links[l];
    if (static_cast<std::size_t>(h.rows()) != rows || static_cast<std::size_t>(h.cols()) != cols) {
      std::ostringstream msg;
      msg << "H_" << l << " is " << h.rows() << "x" << h.cols() << ", expected " << rows << "x"
          << cols;
      throw std::invalid_argument(stage_error(l, msg.str()));
    }
  }
}

ComplexMatrix compose_cascade(const ChannelSet& channels, const RisConfiguration& ris) {
  if (channels.links.empty()) throw std::invalid_argument("compose_cascade: no links");
  if (channels.links.size() != ris.phases.size() + 1) {
    throw std::invalid_argument("compose_cascade: " + std::to_string(channels.links.size()) +
                                " links need " + std::to_string(channels.links.size() - 1) +
                                " phase matrices, got " + std::to_string(ris.phases.size()));
  }
  ComplexMatrix acc = channels.links.front();
  for (std::size_t l = 1; l < channels.links.size(); ++l) {
    const ComplexMatrix& phi = ris.phases[l - 1];
    const ComplexMatrix& h = channels.links[l];
    if (phi.rows() != phi.cols() || phi.cols() != acc.rows()) {
      std::ostringstream msg;
      msg << "Phi_" << l << " is " << phi.rows() << "x" << phi.cols() << " but incoming signal has "
          << acc.rows() << " rows";
      throw std::invalid_argument(stage_error(l, msg.str()));
    }
    if (h.cols() != phi.rows()) {
      std::ostringstream msg;
      msg << "H_" << l << " has " << h.cols() << " columns, Phi_" << l << " is " << phi.rows()
          << "x" << phi.cols();
      throw std::invalid_argument(stage_error(l, msg.str()));
    }
    acc = h * (phi * acc);
  }
  return acc;
}

}  // namespace cascade_ris
