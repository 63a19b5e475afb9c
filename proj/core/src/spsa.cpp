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

#include "vqbench/spsa.hpp"

#include <cmath>

#include <fmt/format.h>

namespace vqb {
namespace {

std::vector<double> rademacher(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> d(n);
  for (auto& v : d) v = (rng() >> 63) ? 1.0 : -1.0;
  return d;
}

std::vector<double> shifted(std::span<const double> x, const std::vector<double>& delta, double step) {
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += step * delta[i];
  return out;
}

}  // namespace

void SpsaConfig::validate() const {
  if (!(a > 0.0) || !(c > 0.0)) throw std::invalid_argument("spsa: a and c must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("spsa: alpha must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 1.0 / 6.0)) throw std::invalid_argument("spsa: gamma must lie in [0, 1/6]");
  if (!(stability_offset >= 0.0)) throw std::invalid_argument("spsa: stability offset must be >= 0");
}

std::string SpsaConfig::describe() const {
  return fmt::format("a={} alpha={} c={} gamma={} A={}", a, alpha, c, gamma, stability_offset);
}

std::vector<double> spsa_gradient(const std::function<double(std::span<const double>)>& f,
                                  std::span<const double> theta, double ck, std::mt19937_64& rng) {
  const auto delta = rademacher(theta.size(), rng);
  const double diff = f(shifted(theta, delta, ck)) - f(shifted(theta, delta, -ck));
  std::vector<double> g(theta.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = diff / (2.0 * ck * delta[i]);
  return g;
}

OptResult spsa_minimize(const NoisyEvaluator& cost, std::span<const double> x0, const SpsaConfig& config,
                        const ShotSchedule& schedule, ShotLedger& ledger) {
  config.validate();
  OptResult result;
  result.x0.assign(x0.begin(), x0.end());
  result.favourite_kind = "final-iterate";
  std::vector<double> theta = result.x0;
  std::mt19937_64 rng(config.seed);
  EvaluationDriver driver(cost, schedule, ledger, result);

  for (std::int64_t k = 0;; ++k) {
    const double kk = static_cast<double>(k);
    const double ak = config.a / std::pow(config.stability_offset + kk + 1.0, config.alpha);
    const double ck = config.c / std::pow(kk + 1.0, config.gamma);
    const auto delta = rademacher(theta.size(), rng);
    const auto plus = driver.evaluate(shifted(theta, delta, ck));
    if (!plus) break;
    const auto minus = driver.evaluate(shifted(theta, delta, -ck));
    if (!minus) break;
    const double diff = *plus - *minus;
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= ak * diff / (2.0 * ck * delta[i]);
  }
  result.favourite_params = theta;
  return result;
}

}  // namespace vqb
