// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/optimizer.hpp"

#include "cascade_ris/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cascade_ris {

namespace {

using Svd = SvdTriple<double>;

std::vector<Svd> link_svds(const ChannelSet& channels) {
  std::vector<Svd> out;
  out.reserve(channels.links.size());
  for (const auto& h : channels.links) out.push_back(svd(h));
  return out;
}

// Phi_i = V_i U_{i-1}^H for i = first..L.
void align_surfaces(const std::vector<Svd>& svds, std::size_t first, RisConfiguration& ris) {
  for (std::size_t i = first; i < svds.size(); ++i) {
    ris.phases[i - 1] = svds[i].v * svds[i - 1].u.adjoint();
  }
}

double capacity_from_gains(const std::vector<double>& gains, double noise_var) {
  double c = 0.0;
  for (const double g : gains) c += std::log2(1.0 + g / noise_var);
  return c;
}

void check_precoder(const Precoder& precoder, const SystemConfig& config) {
  const auto m = static_cast<Eigen::Index>(config.tx_antennas);
  if (precoder.covariance.rows() != m || precoder.covariance.cols() != m) {
    throw std::invalid_argument("precoder covariance must be tx_antennas x tx_antennas");
  }
}

}  // namespace

Precoder Precoder::uniform(std::size_t tx_antennas, double power_budget) {
  const auto m = static_cast<Eigen::Index>(tx_antennas);
  Precoder p;
  p.kind = PrecoderKind::Upa;
  p.covariance = ComplexMatrix::Identity(m, m) * (power_budget / static_cast<double>(tx_antennas));
  p.trace_budget = power_budget;
  return p;
}

void SvdWfSettings::validate() const {
  if (!(epsilon > 0)) throw std::invalid_argument("svdwf: epsilon must be positive");
  if (max_iterations < 1) throw std::invalid_argument("svdwf: max_iterations must be >= 1");
}

Design optimize_upa(const ChannelSet& channels, const SystemConfig& config) {
  config.validate();
  check_channels(channels, config);

  const auto svds = link_svds(channels);
  Design d;
  d.ris = RisConfiguration::identity(config);
  align_surfaces(svds, 1, d.ris);
  d.precoder = Precoder::uniform(config.tx_antennas, config.power_budget);

  std::size_t rank = svds.front().s.size();
  for (const auto& s : svds) rank = std::min(rank, numerical_rank(s.s));

  const double per_antenna = config.power_budget / static_cast<double>(config.tx_antennas);
  auto& rep = d.report;
  rep.noise_var = config.noise_var;
  rep.rank = rank;
  rep.stream_gains.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    double g = per_antenna;
    for (const auto& s : svds) g *= s.s(static_cast<Eigen::Index>(k)) * s.s(static_cast<Eigen::Index>(k));
    rep.stream_gains.push_back(g);
  }
  rep.capacity_bits = capacity_from_gains(rep.stream_gains, config.noise_var);
  rep.iterations = 0;
  rep.converged = true;
  return d;
}

Design optimize_svdwf(const ChannelSet& channels, const SystemConfig& config,
                      const SvdWfSettings& settings) {
  config.validate();
  settings.validate();
  check_channels(channels, config);

  const auto svds = link_svds(channels);
  const auto m = static_cast<Eigen::Index>(config.tx_antennas);

  Design d;
  d.ris = RisConfiguration::identity(config);
  align_surfaces(svds, 2, d.ris);
  d.precoder.kind = PrecoderKind::General;
  d.precoder.trace_budget = config.power_budget;
  d.precoder.covariance = ComplexMatrix::Identity(m, m);

  auto& rep = d.report;
  rep.noise_var = config.noise_var;
  rep.converged = false;

  const ComplexMatrix& h0 = channels.links.front();
  const ComplexMatrix& v1 = svds[1].v;

  for (std::size_t k = 1; k <= settings.max_iterations; ++k) {
    const ComplexMatrix h0_tilde = h0 * psd_sqrt(d.precoder.covariance);
    d.ris.phases[0] = v1 * svd(h0_tilde).u.adjoint();

    const auto cas = svd(compose_cascade(channels, d.ris));
    const std::size_t rank = numerical_rank(cas.s);
    rep.iterations = k;

    if (rank == 0) {
      d.precoder = Precoder::uniform(config.tx_antennas, config.power_budget);
      d.precoder.kind = PrecoderKind::General;
      rep.rank = 0;
      rep.stream_gains.clear();
      rep.capacity_bits = 0.0;
      rep.capacity_trace.push_back(0.0);
      rep.converged = true;
      break;
    }

    std::vector<double> eig(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      const double s = cas.s(static_cast<Eigen::Index>(r));
      eig[r] = s * s;
    }
    const auto wf = waterfill(eig, config.noise_var, config.power_budget);

    ComplexMatrix q = ComplexMatrix::Zero(m, m);
    std::vector<double> gains(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      const auto col = cas.v.col(static_cast<Eigen::Index>(r));
      q.noalias() += wf.powers[r] * (col * col.adjoint());
      gains[r] = eig[r] * wf.powers[r];
    }
    d.precoder.covariance = 0.5 * (q + q.adjoint());

    rep.rank = rank;
    rep.stream_gains = gains;
    rep.capacity_bits = capacity_from_gains(gains, config.noise_var);
    rep.capacity_trace.push_back(rep.capacity_bits);

    // The initial point Q_0 = I_M need not meet the budget, so the stopping
    // rule compares consecutive feasible iterates.
    if (k >= 2) {
      const double prev = rep.capacity_trace[rep.capacity_trace.size() - 2];
      if (std::abs(rep.capacity_bits - prev) <= settings.epsilon) {
        rep.converged = true;
        break;
      }
    }
  }
  return d;
}

double trace_objective(const ChannelSet& channels, const RisConfiguration& ris,
                       const Precoder& precoder) {
  const ComplexMatrix h = compose_cascade(channels, ris);
  if (precoder.covariance.rows() != h.cols() || precoder.covariance.cols() != h.cols()) {
    throw std::invalid_argument("trace_objective: covariance does not conform to channel");
  }
  return (h * precoder.covariance * h.adjoint()).trace().real();
}

ComplexMatrix project_diagonal(const ComplexMatrix& phi) {
  if (phi.rows() != phi.cols()) throw std::invalid_argument("project_diagonal: matrix must be square");
  ComplexMatrix out = ComplexMatrix::Zero(phi.rows(), phi.cols());
  for (Eigen::Index j = 0; j < phi.rows(); ++j) {
    const auto x = phi(j, j);
    const double mag = std::abs(x);
    out(j, j) = mag < 1e-12 ? std::complex<double>(1.0, 0.0) : x / mag;
  }
  return out;
}

RisConfiguration project_diagonal(const RisConfiguration& ris) {
  RisConfiguration out;
  out.phases.reserve(ris.phases.size());
  for (const auto& p : ris.phases) out.phases.push_back(project_diagonal(p));
  return out;
}

CapacityReport evaluate(const ChannelSet& channels, const RisConfiguration& ris,
                        const Precoder& precoder, const SystemConfig& config) {
  config.validate();
  check_channels(channels, config);
  check_precoder(precoder, config);

  const ComplexMatrix h = compose_cascade(channels, ris);
  CapacityReport rep;
  rep.noise_var = config.noise_var;
  rep.capacity_bits = logdet_capacity(h, precoder.covariance, config.noise_var);

  // Singular values of H Q^{1/2} give the effective gains without squaring roundoff.
  const auto eff = svd(h * psd_sqrt(precoder.covariance));
  rep.rank = numerical_rank(eff.s);
  rep.stream_gains.reserve(rep.rank);
  for (std::size_t k = 0; k < rep.rank; ++k) {
    const double s = eff.s(static_cast<Eigen::Index>(k));
    rep.stream_gains.push_back(s * s);
  }
  return rep;
}

}  // namespace cascade_ris
