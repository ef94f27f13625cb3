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
#include <string>
#include <vector>

#include "nisqlab/distribution.hpp"
#include "nisqlab/walsh.hpp"

namespace nisqlab {

/// Distance between empirical distributions. L2 is the default: with sample
/// counts comparable to 2^n, TV saturates on sampling noise while L2 stays
/// informative.
enum class Metric { l2, tv };

Metric parse_metric(const std::string &name);
const char *metric_name(Metric metric);

/// Distance between the empirical distributions of the first and second
/// half of the stream, in stream order. An odd trailing sample is dropped.
double sequential_half_distance(const SampleSet &s, Metric metric);

/// Permutation test of "the stream is exchangeable": the sequential-half
/// distance is compared against B random equal-split distances.
struct StationarityReport {
    double observed_distance = 0.0;
    std::vector<double> null_distances; // B random-split distances
    double p_value = 1.0; // add-one convention: (1 + #{null >= obs}) / (B+1)
    Metric metric = Metric::l2;
    int B = 0;
    uint64_t seed = 0;
    bool dropped_last = false; // odd stream, last sample excluded
    size_t sample_count = 0;   // samples actually used (even)
};

/// Requires |s| >= 100 and B >= 99. Deterministic given seed, regardless of
/// thread count (split b draws only from the stream keyed (seed, b)).
StationarityReport stationarity_test(const SampleSet &s, int B, Metric metric,
                                     uint64_t seed);

/// Degree weights W_d estimated from samples, with per-degree standard
/// errors.
struct DegreeProfileEstimate {
    int n = 0;
    int max_degree = 0;
    std::vector<double> weight;  // size max_degree + 1; weight[0] == 1
    std::vector<double> std_err; // same size; 0 at degree 0
    std::string estimator;
    size_t sample_count = 0;
};

/// cross_split: per-subset coefficient estimates from the two stream halves
/// multiplied together (unbiased for coefficient^2; the halves are split at
/// the midpoint so the estimator cannot mask non-stationarity).
/// fwht_debiased: plug-in squared coefficients of the full empirical
/// density with the additive bias (1 - c^2)/(N - 1) removed per subset.
enum class ProfileEstimator { cross_split, fwht_debiased };

ProfileEstimator parse_estimator(const std::string &name);
const char *estimator_name(ProfileEstimator estimator);

/// Requires |s| >= 1000 and max_degree <= n. The seed is reserved for
/// resampling-based estimators; both built-in estimators are deterministic
/// and ignore it.
DegreeProfileEstimate estimate_degree_profile(const SampleSet &s,
                                              int max_degree,
                                              ProfileEstimator estimator,
                                              uint64_t seed = 0);

DegreeProfile exact_degree_profile(const OutcomeDistribution &p);

/// Least-squares line through (d, log(W_d_noisy / W_d_ref)). Degrees where
/// either weight is nonpositive, or an estimated weight sits below 10x its
/// standard error, are excluded before fitting.
struct DecayFit {
    std::vector<int> degrees;
    std::vector<double> log_ratios;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double effective_rho = 1.0; // exp(slope / 2)
};

DecayFit decay_fit(const DegreeProfileEstimate &noisy, const DegreeProfile &ref,
                   int degree_lo, int degree_hi);

/// Both profiles exact (e.g. analytic noise against the ideal circuit).
DecayFit decay_fit(const DegreeProfile &noisy, const DegreeProfile &ref,
                   int degree_lo, int degree_hi);

/// Linear cross-entropy fidelity: 2^n * mean_i ideal[x_i] - 1.
double xeb_fidelity(const SampleSet &s, const OutcomeDistribution &ideal);

} // namespace nisqlab
