// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade_ris/numerics.hpp"
#include "oracles.hpp"

#include <numbers>
#include <random>

using namespace cascade_ris;
using Mat = CMatrix<double>;

TEST_CASE("svd of the identity") {
  const auto r = svd(Mat::Identity(2, 2));
  CHECK(r.s(0) == doctest::Approx(1.0));
  CHECK(r.s(1) == doctest::Approx(1.0));
  CHECK((r.u - Mat::Identity(2, 2)).norm() < 1e-12);
  CHECK((r.v - Mat::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("svd sorts singular values descending") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 4.0;
  const auto r = svd(d);
  CHECK(r.s(0) == doctest::Approx(4.0));
  CHECK(r.s(1) == doctest::Approx(3.0));
  CHECK((r.reconstruct() - d).norm() < 1e-12);
}

TEST_CASE("svd reconstruction, orthonormality and phase convention on random shapes") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 16);
  for (int i = 0; i < 1000; ++i) {
    const Mat a = oracle::random_complex(dim(rng), dim(rng), rng);
    const auto r = svd(a);
    CHECK((r.reconstruct() - a).norm() / a.norm() <= 1e-9);
    CHECK((r.u.adjoint() * r.u - Mat::Identity(a.rows(), a.rows())).norm() <= 1e-9);
    CHECK((r.v.adjoint() * r.v - Mat::Identity(a.cols(), a.cols())).norm() <= 1e-9);
    for (Eigen::Index k = 1; k < r.s.size(); ++k) CHECK(r.s(k) <= r.s(k - 1));
    for (Eigen::Index k = 0; k < r.u.cols(); ++k) {
      Eigen::Index first = 0;
      while (std::abs(r.u(first, k)) <= 1e-10) ++first;
      CHECK(std::abs(r.u(first, k).imag()) < 1e-12);
      CHECK(r.u(first, k).real() > 0.0);
    }
  }
}

TEST_CASE("svd 4x6 matches reconstruction and is repeatable") {
  std::mt19937_64 rng(3);
  const Mat a = oracle::random_complex(4, 6, rng);
  const auto r1 = svd(a);
  const auto r2 = svd(a);
  CHECK((r1.reconstruct() - a).norm() / a.norm() <= 1e-9);
  CHECK(r1.u == r2.u);
  CHECK(r1.v == r2.v);
  CHECK((r1.s.array().square().matrix() - oracle::squared_singular_values(a)).norm() < 1e-10);
}

TEST_CASE("svd rejects non-finite input with the offending position") {
  Mat a = Mat::Identity(3, 3);
  a(1, 2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd(a), std::invalid_argument);
}

TEST_CASE("numerical rank uses a relative cutoff") {
  Eigen::VectorXd s(3);
  s << 1.0, 1e-9, 1e-11;
  CHECK(numerical_rank(s) == 2);
  CHECK(numerical_rank(Eigen::VectorXd::Zero(3)) == 0);
}

TEST_CASE("waterfill hand examples") {
  SUBCASE("single stream takes everything") {
    const auto r = waterfill(std::vector<double>{5.0}, 1.0, 2.0);
    CHECK(r.powers[0] == doctest::Approx(2.0));
  }
  SUBCASE("two streams") {
    const auto r = waterfill(std::vector<double>{4.0, 1.0}, 1.0, 1.0);
    CHECK(r.powers[0] == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(r.powers[1] == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(r.water_level == doctest::Approx(1.125).epsilon(1e-12));
    double level = 0.0;
    const auto ref = oracle::waterfill_bisection({4.0, 1.0}, 1.0, 1.0, &level);
    CHECK(r.powers[0] == doctest::Approx(ref[0]).epsilon(1e-10));
    CHECK(level == doctest::Approx(1.125).epsilon(1e-10));
  }
  SUBCASE("weak stream shut off") {
    const auto r = waterfill(std::vector<double>{1.0, 1e-6}, 1.0, 1.0);
    CHECK(r.powers[0] == doctest::Approx(1.0));
    CHECK(r.powers[1] == 0.0);
    CHECK(r.active_streams == 1);
  }
}

TEST_CASE("waterfill preconditions") {
  CHECK_THROWS_AS(waterfill(std::vector<double>{}, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfill(std::vector<double>{1.0, 0.0}, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfill(std::vector<double>{1.0}, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfill(std::vector<double>{1.0}, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("waterfill KKT, bisection agreement and optimality under perturbation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 12);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> g(static_cast<std::size_t>(count(rng)));
    for (auto& x : g) x = std::pow(10.0, -3.0 + 6.0 * u(rng));
    const double noise = std::pow(10.0, -1.0 + 2.0 * u(rng));
    const double power = std::pow(10.0, -1.0 + 3.0 * u(rng));
    const auto r = waterfill(g, noise, power);

    double total = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      total += r.powers[k];
      if (r.powers[k] > 0) CHECK(std::abs(r.powers[k] + noise / g[k] - r.water_level) <= 1e-9);
      else CHECK(noise / g[k] >= r.water_level - 1e-9);
    }
    CHECK(std::abs(total - power) <= 1e-10);

    const auto ref = oracle::waterfill_bisection(g, noise, power);
    const double best = oracle::sum_rate(g, r.powers, noise);
    CHECK(best == doctest::Approx(oracle::sum_rate(g, ref, noise)).epsilon(1e-9));

    for (std::size_t k = 0; k < g.size(); ++k) {
      if (r.powers[k] <= 0 || r.active_streams < 2) continue;
      auto p = r.powers;
      const double freed = p[k];
      p[k] = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (j != k && r.powers[j] > 0) p[j] += freed / static_cast<double>(r.active_streams - 1);
      }
      CHECK(oracle::sum_rate(g, p, noise) <= best + 1e-12);
    }
  }
}

TEST_CASE("digamma reference values") {
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649).epsilon(1e-10));
  CHECK(digamma(2.0) == doctest::Approx(0.4227843351).epsilon(1e-10));
  CHECK(digamma(0.5) == doctest::Approx(-1.9635100260).epsilon(1e-10));
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-1.5), std::domain_error);
}

TEST_CASE("digamma agrees with an independent implementation and its recurrence") {
  for (int i = 0; i <= 4950; ++i) {
    const double x = 0.5 + 0.01 * i;
    CHECK(std::abs(digamma(x) - oracle::digamma(x)) <= 1e-12 * std::max(1.0, std::abs(oracle::digamma(x))));
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-10);
  }
  CHECK(digamma(1e-3) == doctest::Approx(oracle::digamma(1e-3)).epsilon(1e-12));
  CHECK(digamma(1e6) == doctest::Approx(oracle::digamma(1e6)).epsilon(1e-14));
}

TEST_CASE("wishart moments: closed values") {
  CHECK(wishart_eig_moment(1, {1, 1, 0.0}) == doctest::Approx(1.0));
  CHECK(wishart_eig_moment(2, {1, 1, 0.0}) == doctest::Approx(2.0));
  CHECK(wishart_eig_moment(1, {4, 4, 0.0}) == doctest::Approx(4.0));
  CHECK_THROWS_AS(wishart_eig_moment(3, {1, 1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(wishart_eig_moment(1, {4, 2, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(wishart_eig_moment(1, {2, 2, 1.0}), std::invalid_argument);
}

TEST_CASE("wishart moments against Monte Carlo") {
  const Eigen::Index dims[] = {1, 2, 4, 8};
  std::uint64_t seed = 100;
  for (const auto dim : dims) {
    for (const auto dof : dims) {
      if (dof < dim) continue;
      const WishartParams p{static_cast<std::size_t>(dim), static_cast<std::size_t>(dof), 0.0};
      for (int order : {1, 2}) {
        const double mc = oracle::wishart_moment_mc(order, dim, dof, 20000, ++seed);
        CAPTURE(dim);
        CAPTURE(dof);
        CAPTURE(order);
        CHECK(wishart_eig_moment(order, p) == doctest::Approx(mc).epsilon(0.03));
      }
    }
  }
}

TEST_CASE("psd_sqrt squares back and clips roundoff") {
  std::mt19937_64 rng(5);
  const Mat g = oracle::random_complex(4, 4, rng);
  const Mat q = g * g.adjoint();
  const Mat r = psd_sqrt(q);
  CHECK((r * r - q).norm() < 1e-10 * q.norm());
  Mat tiny = Mat::Zero(2, 2);
  tiny(0, 0) = 1.0;
  tiny(1, 1) = -1e-12;
  CHECK(std::abs(psd_sqrt(tiny)(1, 1)) == 0.0);
  tiny(1, 1) = -1e-3;
  CHECK_THROWS_AS(psd_sqrt(tiny), std::invalid_argument);
}

TEST_CASE("logdet capacity") {
  CHECK(logdet_capacity(Mat::Zero(3, 2), Mat::Identity(2, 2)) == doctest::Approx(0.0));
  CHECK(logdet_capacity(Mat::Identity(2, 2), Mat::Identity(2, 2), 1.0) == doctest::Approx(2.0));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Mat h = oracle::random_complex(4, 4, rng);
    const Mat g = oracle::random_complex(4, 4, rng);
    const Mat q = g * g.adjoint();
    const double noise = 0.5 + i * 0.1;
    CHECK(logdet_capacity(h, q, noise) == doctest::Approx(oracle::capacity_eig(h, q, noise)).epsilon(1e-10));
  }

  Mat nonherm = Mat::Identity(2, 2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(logdet_capacity(Mat::Identity(2, 2), nonherm), std::invalid_argument);
  CHECK_THROWS_AS(logdet_capacity(Mat::Identity(2, 3), Mat::Identity(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(logdet_capacity(Mat::Identity(2, 2), -Mat::Identity(2, 2)), std::invalid_argument);
}
