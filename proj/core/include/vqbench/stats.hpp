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

#pragma once

#include <optional>
#include <span>
#include <vector>

namespace vqb::stats {

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_stddev(std::span<const double> xs);

/// Two-sided Student-t confidence interval of the mean.
struct MeanInterval {
  double mean = 0.0;
  std::optional<double> low;   // absent for n < 2
  std::optional<double> high;
};

MeanInterval mean_confidence_interval(std::span<const double> xs, double level = 0.95);

/// Upper quantile of the standard normal: z with P(Z > z) = p.
double normal_upper_quantile(double p);
/// Quantile of Student's t with `dof` degrees of freedom at probability q.
double student_t_quantile(double q, double dof);

/// One-way analysis of variance over equally or unequally sized groups.
struct AnovaResult {
  double f = 0.0;
  double p_value = 1.0;
  double df_between = 0.0;
  double df_within = 0.0;
  double ms_within = 0.0;
  double critical = 0.0;  // F quantile at 1 - alpha
};

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups, double alpha);

/// Upper-tail probability of Student's t.
double student_t_upper_tail(double t, double dof);

}  // namespace vqb::stats
