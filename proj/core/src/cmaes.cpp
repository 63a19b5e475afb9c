// Copyright 2026 The vqbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqbench/cmaes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace vqb {

int default_population(int dimension) {
  if (dimension < 1) throw std::invalid_argument("cma: dimension must be >= 1");
  return static_cast<int>(std::ceil(4.0 + 3.0 * std::log(static_cast<double>(dimension))));
}

int CmaConfig::population_for(int dimension) const { return population.value_or(default_population(dimension)); }

int CmaConfig::parents_for(int dimension) const {
  const int lambda = population_for(dimension);
  return std::clamp(static_cast<int>(std::ceil(parent_fraction * lambda)), 1, lambda);
}

void CmaConfig::validate() const {
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) throw std::invalid_argument("cma: sigma0 must be positive");
  if (population && *population < 2) throw std::invalid_argument("cma: population must be >= 2");
  if (!(parent_fraction >= 0.0 && parent_fraction <= 0.5)) throw std::invalid_argument("cma: mu must lie in [0, 0.5]");
  if (!(c_mean >= 0.0 && c_mean <= 1.0)) throw std::invalid_argument("cma: c_mean must lie in [0, 1]");
  if (!(damp_factor > 0.0 && damp_factor <= 1.0)) throw std::invalid_argument("cma: damp_factor must lie in (0, 1]");
}

std::string CmaConfig::describe(int dimension) const {
  return fmt::format("sigma0={} population={}{} mu={} c_mean={} damp_factor={}", sigma0, population_for(dimension),
                     population ? "" : " (default ceil(4+3*ln(m)), natural log)", parent_fraction, c_mean,
                     damp_factor);
}

namespace {

struct Strategy {
  int n;
  int lambda;
  int mu;
  Eigen::VectorXd weights;
  double mueff;
  double cs, ds, cc, c1, cmu, chi_n;

  Strategy(int dim, const CmaConfig& cfg) : n(dim), lambda(cfg.population_for(dim)), mu(cfg.parents_for(dim)) {
    weights.resize(mu);
    for (int i = 0; i < mu; ++i) weights(i) = std::log(mu + 0.5) - std::log(i + 1.0);
    weights /= weights.sum();
    mueff = 1.0 / weights.squaredNorm();
    const double nd = n;
    cs = (mueff + 2.0) / (nd + mueff + 5.0);
    ds = cfg.damp_factor * (1.0 + 2.0 * std::max(0.0, std::sqrt((mueff - 1.0) / (nd + 1.0)) - 1.0) + cs);
    cc = (4.0 + mueff / nd) / (nd + 4.0 + 2.0 * mueff / nd);
    c1 = 2.0 / ((nd + 1.3) * (nd + 1.3) + mueff);
    cmu = std::min(1.0 - c1, 2.0 * (mueff - 2.0 + 1.0 / mueff) / ((nd + 2.0) * (nd + 2.0) + mueff));
    chi_n = std::sqrt(nd) * (1.0 - 1.0 / (4.0 * nd) + 1.0 / (21.0 * nd * nd));
  }
};

struct Distribution {
  Eigen::VectorXd mean;
  double sigma;
  Eigen::MatrixXd cov;
  Eigen::MatrixXd basis;   // B
  Eigen::VectorXd scales;  // D (square roots of eigenvalues)
  Eigen::VectorXd ps;
  Eigen::VectorXd pc;

  void reset(double sigma0) {
    const auto n = mean.size();
    sigma = sigma0;
    cov = Eigen::MatrixXd::Identity(n, n);
    basis = Eigen::MatrixXd::Identity(n, n);
    scales = Eigen::VectorXd::Ones(n);
    ps = Eigen::VectorXd::Zero(n);
    pc = Eigen::VectorXd::Zero(n);
  }

  // False on numerical failure of the covariance.
  bool decompose() {
    cov = 0.5 * (cov + cov.transpose());
    if (!cov.allFinite()) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    if (es.info() != Eigen::Success) return false;
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0 || !ev.allFinite()) return false;
    if (ev.maxCoeff() / ev.minCoeff() > 1e14) return false;
    basis = es.eigenvectors();
    scales = ev.cwiseSqrt();
    return std::isfinite(sigma) && sigma > 0.0 && sigma * scales.maxCoeff() < 1e10;
  }
};

}  // namespace

OptResult cma_minimize(const NoisyEvaluator& cost, std::span<const double> x0, const CmaConfig& config,
                       const ShotSchedule& schedule, ShotLedger& ledger) {
  config.validate();
  const int n = static_cast<int>(x0.size());
  if (n < 1) throw std::invalid_argument("cma: empty parameter vector");
  OptResult result;
  result.x0.assign(x0.begin(), x0.end());
  result.favourite_kind = "final-mean";

  const Strategy s(n, config);
  Distribution d;
  d.mean = Eigen::Map<const Eigen::VectorXd>(x0.data(), n);
  d.reset(config.sigma0);

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  EvaluationDriver driver(cost, schedule, ledger, result);

  Eigen::MatrixXd y(n, s.lambda);
  std::vector<double> fitness(s.lambda);
  std::vector<int> order(s.lambda);
  bool stopped = false;
  for (int gen = 0; !stopped; ++gen) {
    for (int k = 0; k < s.lambda; ++k) {
      Eigen::VectorXd z(n);
      for (int i = 0; i < n; ++i) z(i) = normal(rng);
      y.col(k) = d.basis * d.scales.cwiseProduct(z);
      const Eigen::VectorXd x = d.mean + d.sigma * y.col(k);
      const auto f = driver.evaluate(std::span<const double>(x.data(), n));
      if (!f) {
        stopped = true;
        break;
      }
      fitness[k] = *f;
    }
    if (stopped) break;

    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fitness[a] < fitness[b]; });

    Eigen::VectorXd yw = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < s.mu; ++i) yw += s.weights(i) * y.col(order[i]);
    d.mean += config.c_mean * d.sigma * yw;

    // C^{-1/2} y_w = B D^{-1} B^T y_w
    const Eigen::VectorXd c_inv_sqrt_yw = d.basis * (d.basis.transpose() * yw).cwiseQuotient(d.scales);
    d.ps = (1.0 - s.cs) * d.ps + std::sqrt(s.cs * (2.0 - s.cs) * s.mueff) * c_inv_sqrt_yw;
    const double ps_norm = d.ps.norm();
    const double hs_denom = std::sqrt(1.0 - std::pow(1.0 - s.cs, 2.0 * (gen + 1)));
    const bool hsig = ps_norm / hs_denom < (1.4 + 2.0 / (n + 1.0)) * s.chi_n;
    d.pc = (1.0 - s.cc) * d.pc + (hsig ? std::sqrt(s.cc * (2.0 - s.cc) * s.mueff) : 0.0) * yw;
    const double delta_h = hsig ? 0.0 : s.cc * (2.0 - s.cc);

    Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < s.mu; ++i) rank_mu += s.weights(i) * y.col(order[i]) * y.col(order[i]).transpose();
    d.cov = (1.0 - s.c1 - s.cmu + s.c1 * delta_h) * d.cov + s.c1 * d.pc * d.pc.transpose() + s.cmu * rank_mu;
    d.sigma *= std::exp((s.cs / s.ds) * (ps_norm / s.chi_n - 1.0));

    if (!d.decompose()) {
      if (result.restarts >= config.max_restarts) {
        spdlog::warn("cma: covariance failure after {} restarts; stopping", result.restarts);
        break;
      }
      ++result.restarts;
      spdlog::warn("cma: covariance failure in generation {}; resetting sigma to {} (restart {})", gen,
                   config.sigma0, result.restarts);
      d.reset(config.sigma0);
    }
  }
  result.favourite_params.assign(d.mean.data(), d.mean.data() + n);
  return result;
}

}  // namespace vqb
