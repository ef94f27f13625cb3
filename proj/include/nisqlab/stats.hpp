// Copyright 2026 The nisqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nisqlab {

/// Regularized upper incomplete gamma Q(a, x); series + continued fraction.
double gamma_q(double a, double x);

/// Survival function of a chi-square with df degrees of freedom.
double chi_square_sf(double statistic, double df);

/// Pearson goodness-of-fit p-value of observed counts against expected
/// probabilities. Bins with expected count below min_expected are pooled
/// into their neighbor to keep the chi-square approximation honest.
double chi_square_gof_pvalue(std::span<const int64_t> observed,
                             std::span<const double> expected_probability,
                             double min_expected = 5.0);

/// Two-sided Kolmogorov-Smirnov statistic of values against Uniform(0, 1].
double ks_uniform_statistic(std::vector<double> values);

/// Asymptotic two-sided KS critical value at the given level.
double ks_critical_value(size_t sample_count, double level);

/// Ordinary least squares of y on x. r_squared is clamped to [0, 1] and
/// defined as 1 for a perfect fit with zero variance.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

} // namespace nisqlab
