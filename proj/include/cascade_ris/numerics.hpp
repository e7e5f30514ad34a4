// SPDX-License-Identifier: Apache-2.0
//
// Dense numerical kernels shared by the optimizers and the analytic predictors:
// phase-normalized complex SVD, water-filling, digamma, Wishart eigenvalue
// moments and log-determinant capacity.  Everything here is a pure function,
// templated on the real scalar type and accepting any Eigen expression.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cascade_ris {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Relative cutoff for numerical rank: s_k counts when s_k > kRankTolerance * s_1.
inline constexpr double kRankTolerance = 1e-10;

/// Full SVD A = U diag(S) V^H.  U is rows x rows, V is cols x cols and S holds
/// min(rows, cols) singular values in descending order.
template <typename Real>
struct SvdTriple {
  CMatrix<Real> u;
  RVector<Real> s;
  CMatrix<Real> v;

  CMatrix<Real> reconstruct() const {
    const Eigen::Index p = s.size();
    return u.leftCols(p) * s.template cast<std::complex<Real>>().asDiagonal() *
           v.leftCols(p).adjoint();
  }
};

template <typename Real>
struct WaterfillResult {
  std::vector<Real> powers;
  Real water_level{};
  std::size_t active_streams{};
};

/// Parameters of W = H H^H with H of size dim x dof, iid CN(0, 1) entries.
struct WishartParams {
  std::size_t dim{1};
  std::size_t dof{1};
  double scale_logdet{0.0};
};

namespace detail {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& a, const char* what) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      const auto x = a(r, c);
      if (!std::isfinite(std::real(x)) || !std::isfinite(std::imag(x))) {
        std::ostringstream msg;
        msg << what << ": non-finite entry at (" << r << ", " << c << ")";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

// Rotate a column so that its first entry with modulus above `tol` becomes
// real and nonnegative.  Returns the applied unit-modulus factor.
template <typename Real>
std::complex<Real> normalize_column_phase(Eigen::Ref<CMatrix<Real>> m, Eigen::Index col,
                                          Real tol) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const std::complex<Real> x = m(r, col);
    const Real mag = std::abs(x);
    if (mag > tol) {
      const std::complex<Real> phase = std::conj(x) / mag;
      m.col(col) *= phase;
      m(r, col) = std::complex<Real>(std::abs(m(r, col)), Real(0));
      return phase;
    }
  }
  return std::complex<Real>(1);
}

}  // namespace detail

/// Phase-normalized full SVD.  The first non-negligible entry of every column
/// of U is real and nonnegative; paired V columns receive the same rotation so
/// the reconstruction is unchanged.
template <typename Derived>
auto svd(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Mat = CMatrix<Real>;
  if (a.rows() == 0 || a.cols() == 0) {
    throw std::invalid_argument("svd: empty matrix");
  }
  detail::require_finite(a, "svd");

  const Mat m = a.template cast<std::complex<Real>>();
  Eigen::BDCSVD<Mat> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);

  SvdTriple<Real> out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  const Eigen::Index p = out.s.size();
  const Real tol = Real(1e-10);
  for (Eigen::Index k = 0; k < out.u.cols(); ++k) {
    const std::complex<Real> phase = detail::normalize_column_phase<Real>(out.u, k, tol);
    if (k < p) out.v.col(k) *= phase;
  }
  for (Eigen::Index k = p; k < out.v.cols(); ++k) {
    detail::normalize_column_phase<Real>(out.v, k, tol);
  }
  return out;
}

/// Number of singular values above kRankTolerance relative to the largest.
template <typename Derived>
std::size_t numerical_rank(const Eigen::MatrixBase<Derived>& singular_values) {
  if (singular_values.size() == 0) return 0;
  const auto top = singular_values.maxCoeff();
  if (!(top > 0)) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < singular_values.size(); ++k) {
    if (singular_values(k) > kRankTolerance * top) ++r;
  }
  return r;
}

/// Water-filling p_r = (level - noise/gain_r)^+ with sum(p) = total_power.
/// Exact active-set elimination: streams are dropped weakest-first until the
/// common water level clears every remaining stream's floor.
template <typename Real>
WaterfillResult<Real> waterfill(std::span<const Real> gains, Real noise_var, Real total_power) {
  if (gains.empty()) throw std::invalid_argument("waterfill: empty gain list");
  if (!(noise_var > 0)) throw std::invalid_argument("waterfill: noise variance must be positive");
  if (!(total_power > 0)) throw std::invalid_argument("waterfill: power budget must be positive");
  for (const Real g : gains) {
    if (!(g > 0) || !std::isfinite(g)) {
      throw std::invalid_argument("waterfill: gains must be positive and finite");
    }
  }

  std::vector<std::size_t> order(gains.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return gains[i] > gains[j]; });

  // Prefix sums of the floors noise/gain in descending-gain order.
  std::vector<Real> floors(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) floors[i] = noise_var / gains[order[i]];

  std::size_t active = order.size();
  Real level{};
  for (; active >= 1; --active) {
    Real floor_sum{};
    for (std::size_t i = 0; i < active; ++i) floor_sum += floors[i];
    level = (total_power + floor_sum) / static_cast<Real>(active);
    if (level > floors[active - 1]) break;
  }

  WaterfillResult<Real> out;
  out.powers.assign(gains.size(), Real(0));
  out.water_level = level;
  out.active_streams = active;
  for (std::size_t i = 0; i < active; ++i) out.powers[order[i]] = level - floors[i];
  return out;
}

template <typename Real>
WaterfillResult<Real> waterfill(const std::vector<Real>& gains, Real noise_var, Real total_power) {
  return waterfill(std::span<const Real>(gains), noise_var, total_power);
}

/// Digamma for x > 0: upward recurrence to x >= 10, then the asymptotic series.
template <typename Real>
Real digamma(Real x) {
  if (!(x > 0) || !std::isfinite(x)) {
    throw std::domain_error("digamma: argument must be positive and finite");
  }
  Real shift{};
  while (x < Real(10)) {
    shift -= Real(1) / x;
    x += Real(1);
  }
  const Real inv = Real(1) / x;
  const Real inv2 = inv * inv;
  // Bernoulli terms B_2k / (2k x^2k), k = 1..7, in Horner form.
  const Real series =
      inv2 * (Real(1) / 12 -
              inv2 * (Real(1) / 120 -
                      inv2 * (Real(1) / 252 -
                              inv2 * (Real(1) / 240 -
                                      inv2 * (Real(1) / 132 -
                                              inv2 * (Real(691) / 32760 - inv2 * (Real(1) / 12)))))));
  return shift + std::log(x) - Real(0.5) * inv - series;
}

/// E[lambda^order] for a uniformly chosen eigenvalue of an identity-scale
/// complex Wishart matrix, from E[tr W] = dim*dof and E[tr W^2] = dim*dof*(dim+dof).
inline double wishart_eig_moment(int order, const WishartParams& params) {
  if (params.dim < 1 || params.dof < params.dim) {
    throw std::invalid_argument("wishart_eig_moment: require dof >= dim >= 1");
  }
  if (params.scale_logdet != 0.0) {
    throw std::invalid_argument("wishart_eig_moment: only identity scale is supported");
  }
  const double dim = static_cast<double>(params.dim);
  const double dof = static_cast<double>(params.dof);
  switch (order) {
    case 1:
      return dof;
    case 2:
      return dof * (dim + dof);
    default:
      throw std::invalid_argument("wishart_eig_moment: only orders 1 and 2 are supported");
  }
}

/// Hermitian PSD square root; eigenvalues down to -tol * max(1, |lambda|_max)
/// are clipped to zero, anything more negative is rejected.
template <typename Derived>
auto psd_sqrt(const Eigen::MatrixBase<Derived>& q, double tol = 1e-9) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Mat = CMatrix<Real>;
  if (q.rows() != q.cols()) throw std::invalid_argument("psd_sqrt: matrix must be square");
  const Mat m = q.template cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<Mat> eig(m);
  RVector<Real> vals = eig.eigenvalues();
  const Real scale = std::max<Real>(Real(1), vals.cwiseAbs().maxCoeff());
  if (vals.minCoeff() < -Real(tol) * scale) {
    throw std::invalid_argument("psd_sqrt: matrix is not positive semidefinite");
  }
  vals = vals.cwiseMax(Real(0)).cwiseSqrt();
  return Mat(eig.eigenvectors() * vals.template cast<std::complex<Real>>().asDiagonal() *
             eig.eigenvectors().adjoint());
}

/// log2 |I + H Q H^H / noise_var| via a Cholesky factorization.
template <typename DerivedH, typename DerivedQ>
auto logdet_capacity(const Eigen::MatrixBase<DerivedH>& h, const Eigen::MatrixBase<DerivedQ>& q,
                     double noise_var = 1.0) {
  using Real = typename Eigen::NumTraits<typename DerivedH::Scalar>::Real;
  using Mat = CMatrix<Real>;
  if (!(noise_var > 0)) throw std::invalid_argument("logdet_capacity: noise variance must be positive");
  if (q.rows() != q.cols() || q.cols() != h.cols()) {
    throw std::invalid_argument("logdet_capacity: covariance does not conform to channel");
  }
  detail::require_finite(h, "logdet_capacity");
  detail::require_finite(q, "logdet_capacity");

  const Mat hm = h.template cast<std::complex<Real>>();
  const Mat qm = q.template cast<std::complex<Real>>();
  const Real qscale = std::max<Real>(Real(1), qm.norm());
  if ((qm - qm.adjoint()).norm() > Real(1e-9) * qscale) {
    throw std::invalid_argument("logdet_capacity: covariance is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> qeig(qm, Eigen::EigenvaluesOnly);
  if (qeig.eigenvalues().minCoeff() < Real(-1e-9)) {
    throw std::invalid_argument("logdet_capacity: covariance is not positive semidefinite");
  }

  Mat gram = Mat::Identity(hm.rows(), hm.rows());
  gram.noalias() += (hm * qm * hm.adjoint()) / Real(noise_var);
  Eigen::LLT<Mat> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("logdet_capacity: Cholesky factorization failed");
  }
  Real sum{};
  for (Eigen::Index i = 0; i < gram.rows(); ++i) sum += std::log(std::real(llt.matrixL()(i, i)));
  return Real(2) * sum / std::log(Real(2));
}

}  // namespace cascade_ris
