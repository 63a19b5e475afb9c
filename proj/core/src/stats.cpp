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

#include "vqbench/stats.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace vqb::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

MeanInterval mean_confidence_interval(std::span<const double> xs, double level) {
  MeanInterval out;
  out.mean = mean(xs);
  if (xs.size() < 2) return out;
  const double n = static_cast<double>(xs.size());
  const double half = student_t_quantile(0.5 + level / 2.0, n - 1.0) * sample_stddev(xs) / std::sqrt(n);
  out.low = out.mean - half;
  out.high = out.mean + half;
  return out;
}

double normal_upper_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_upper_quantile: p must lie in (0, 1)");
  boost::math::normal_distribution<double> n;
  return boost::math::quantile(boost::math::complement(n, p));
}

double student_t_quantile(double q, double dof) {
  boost::math::students_t_distribution<double> t(dof);
  return boost::math::quantile(t, q);
}

double student_t_upper_tail(double t, double dof) {
  if (std::isinf(t)) return t > 0 ? 0.0 : 1.0;
  boost::math::students_t_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, t));
}

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups, double alpha) {
  AnovaResult r;
  std::size_t n_total = 0;
  double grand = 0.0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("one_way_anova: empty group");
    n_total += g.size();
    grand += std::accumulate(g.begin(), g.end(), 0.0);
  }
  const std::size_t k = groups.size();
  if (k < 2 || n_total <= k) throw std::invalid_argument("one_way_anova: need two groups and positive within dof");
  grand /= static_cast<double>(n_total);
  double ss_between = 0.0;
  double ss_within = 0.0;
  for (const auto& g : groups) {
    const double m = mean(g);
    ss_between += static_cast<double>(g.size()) * (m - grand) * (m - grand);
    for (double x : g) ss_within += (x - m) * (x - m);
  }
  r.df_between = static_cast<double>(k - 1);
  r.df_within = static_cast<double>(n_total - k);
  r.ms_within = ss_within / r.df_within;
  const double ms_between = ss_between / r.df_between;
  boost::math::fisher_f_distribution<double> f(r.df_between, r.df_within);
  r.critical = boost::math::quantile(f, 1.0 - alpha);
  if (r.ms_within > 0.0) {
    r.f = ms_between / r.ms_within;
    r.p_value = boost::math::cdf(boost::math::complement(f, r.f));
  } else if (ms_between > 0.0) {
    r.f = std::numeric_limits<double>::infinity();
    r.p_value = 0.0;
  }
  return r;
}

}  // namespace vqb::stats
