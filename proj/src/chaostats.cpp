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

#include "nisqlab/chaostats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "nisqlab/stats.hpp"

namespace nisqlab {

Metric parse_metric(const std::string &name) {
    if (name == "l2") {
        return Metric::l2;
    }
    if (name == "tv") {
        return Metric::tv;
    }
    throw ValidationError("unknown metric: " + name + " (expected l2 or tv)");
}

const char *metric_name(Metric metric) {
    return metric == Metric::l2 ? "l2" : "tv";
}

namespace {

double distance_from_counts(std::span<const int64_t> a,
                            std::span<const int64_t> b, size_t half,
                            Metric metric) {
    const double inv = 1.0 / static_cast<double>(half);
    if (metric == Metric::tv) {
        int64_t total = 0;
        for (size_t x = 0; x < a.size(); ++x) {
            total += std::abs(a[x] - b[x]);
        }
        return 0.5 * inv * static_cast<double>(total);
    }
    double total = 0.0;
    for (size_t x = 0; x < a.size(); ++x) {
        const double d = static_cast<double>(a[x] - b[x]);
        total += d * d;
    }
    return inv * std::sqrt(total);
}

} // namespace

double sequential_half_distance(const SampleSet &s, Metric metric) {
    require(s.size() >= 2, "need at least two samples to split");
    require(s.ordered(), "stream is marked unordered; sequential statistics "
                         "are meaningless on it");
    const size_t half = s.size() / 2;
    const auto &raw = s.raw();
    std::vector<int64_t> first(size_t{1} << s.n(), 0);
    std::vector<int64_t> second(first.size(), 0);
    for (size_t i = 0; i < half; ++i) {
        ++first[raw[i]];
    }
    for (size_t i = half; i < 2 * half; ++i) {
        ++second[raw[i]];
    }
    return distance_from_counts(first, second, half, metric);
}

StationarityReport stationarity_test(const SampleSet &s, int B, Metric metric,
                                     uint64_t seed) {
    require(s.size() >= 100, "stationarity test needs at least 100 samples");
    require(B >= 99, "stationarity test needs at least 99 splits");
    const size_t used = s.size() - (s.size() % 2);
    const size_t half = used / 2;
    const auto &raw = s.raw();

    StationarityReport report;
    report.metric = metric;
    report.B = B;
    report.seed = seed;
    report.dropped_last = used != s.size();
    report.sample_count = used;
    report.observed_distance = sequential_half_distance(s, metric);

    const auto total = outcome_counts(s, used);
    report.null_distances.resize(static_cast<size_t>(B));

#pragma omp parallel
    {
        std::vector<uint32_t> order(used);
        std::vector<int64_t> first(size_t{1} << s.n());
        std::vector<int64_t> second(first.size());

#pragma omp for schedule(static)
        for (int b = 0; b < B; ++b) {
            // Fresh identity order per split keeps the result a pure
            // function of (seed, b) under any thread schedule.
            std::iota(order.begin(), order.end(), 0u);
            Rng rng(seed, RngStream::split, static_cast<uint64_t>(b));
            std::fill(first.begin(), first.end(), 0);
            for (size_t i = 0; i < half; ++i) {
                const size_t j = i + static_cast<size_t>(rng.next_below(
                                         static_cast<uint64_t>(used - i)));
                std::swap(order[i], order[j]);
                ++first[raw[order[i]]];
            }
            for (size_t x = 0; x < first.size(); ++x) {
                second[x] = total[x] - first[x];
            }
            report.null_distances[static_cast<size_t>(b)] =
                distance_from_counts(first, second, half, metric);
        }
    }

    int at_least = 0;
    for (double d : report.null_distances) {
        if (d >= report.observed_distance) {
            ++at_least;
        }
    }
    report.p_value =
        static_cast<double>(1 + at_least) / static_cast<double>(B + 1);
    return report;
}

ProfileEstimator parse_estimator(const std::string &name) {
    if (name == "cross-split") {
        return ProfileEstimator::cross_split;
    }
    if (name == "fwht-debiased") {
        return ProfileEstimator::fwht_debiased;
    }
    throw ValidationError("unknown estimator: " + name +
                          " (expected cross-split or fwht-debiased)");
}

const char *estimator_name(ProfileEstimator estimator) {
    return estimator == ProfileEstimator::cross_split ? "cross-split"
                                                      : "fwht-debiased";
}

namespace {

// Coefficients c(S) = E_p_hat[chi_S] of an empirical distribution given raw
// counts; the butterfly of counts divided by the sample count.
std::vector<double> empirical_coefficients(std::span<const int64_t> counts,
                                           size_t samples) {
    std::vector<double> p(counts.size());
    const double inv = 1.0 / static_cast<double>(samples);
    for (size_t x = 0; x < counts.size(); ++x) {
        p[x] = static_cast<double>(counts[x]) * inv;
    }
    // spectrum_of validates and keeps the q-normalization in one place
    const int n = std::countr_zero(counts.size());
    return spectrum_of(OutcomeDistribution(n, std::move(p))).coefficients;
}

} // namespace

DegreeProfileEstimate estimate_degree_profile(const SampleSet &s,
                                              int max_degree,
                                              ProfileEstimator estimator,
                                              uint64_t /*seed*/) {
    require(s.size() >= 1000,
            "degree-profile estimation needs at least 1000 samples");
    require(max_degree >= 0 && max_degree <= s.n(),
            "max_degree must be in [0, n]");

    DegreeProfileEstimate est;
    est.n = s.n();
    est.max_degree = max_degree;
    est.estimator = estimator_name(estimator);
    est.sample_count = s.size();
    est.weight.assign(static_cast<size_t>(max_degree) + 1, 0.0);
    est.std_err.assign(static_cast<size_t>(max_degree) + 1, 0.0);
    est.weight[0] = 1.0; // coefficient of the empty set is always 1

    const size_t dim = size_t{1} << s.n();
    std::vector<double> variance(static_cast<size_t>(max_degree) + 1, 0.0);

    if (estimator == ProfileEstimator::cross_split) {
        const size_t na = s.size() / 2;
        const size_t nb = s.size() - na;
        const auto counts_a = outcome_counts(s, na);
        const auto counts_total = outcome_counts(s);
        std::vector<int64_t> counts_b(dim);
        for (size_t x = 0; x < dim; ++x) {
            counts_b[x] = counts_total[x] - counts_a[x];
        }
        const auto ca = empirical_coefficients(counts_a, na);
        const auto cb = empirical_coefficients(counts_b, nb);
        for (size_t sub = 1; sub < dim; ++sub) {
            const int d = std::popcount(sub);
            if (d > max_degree) {
                continue;
            }
            const double term = ca[sub] * cb[sub];
            const double c2 = std::clamp(term, 0.0, 1.0);
            const double va = (1.0 - c2) / static_cast<double>(na);
            const double vb = (1.0 - c2) / static_cast<double>(nb);
            est.weight[static_cast<size_t>(d)] += term;
            variance[static_cast<size_t>(d)] += c2 * (va + vb) + va * vb;
        }
    } else {
        const double samples = static_cast<double>(s.size());
        const auto c = empirical_coefficients(outcome_counts(s), s.size());
        for (size_t sub = 1; sub < dim; ++sub) {
            const int d = std::popcount(sub);
            if (d > max_degree) {
                continue;
            }
            const double c_hat2 = c[sub] * c[sub];
            const double debiased =
                (samples * c_hat2 - 1.0) / (samples - 1.0);
            const double c2 = std::clamp(debiased, 0.0, 1.0);
            const double sigma2 = 1.0 - c2;
            est.weight[static_cast<size_t>(d)] += debiased;
            variance[static_cast<size_t>(d)] +=
                4.0 * c2 * sigma2 / samples +
                2.0 * sigma2 * sigma2 / (samples * (samples - 1.0));
        }
    }

    for (size_t d = 1; d < variance.size(); ++d) {
        est.std_err[d] = std::sqrt(variance[d]);
    }
    return est;
}

DegreeProfile exact_degree_profile(const OutcomeDistribution &p) {
    return degree_profile(spectrum_of(p));
}

namespace {

DecayFit fit_log_ratios(std::span<const double> noisy_w,
                        std::span<const double> noisy_se,
                        std::span<const double> ref_w, int degree_lo,
                        int degree_hi) {
    require(degree_lo <= degree_hi, "empty degree range");
    require(degree_lo >= 0, "degree range must be nonnegative");
    DecayFit fit;
    for (int d = degree_lo; d <= degree_hi; ++d) {
        const size_t i = static_cast<size_t>(d);
        if (i >= noisy_w.size() || i >= ref_w.size()) {
            break;
        }
        const double wn = noisy_w[i];
        const double wr = ref_w[i];
        const double floor_n = noisy_se.empty() ? 0.0 : 10.0 * noisy_se[i];
        if (wn <= floor_n || wn <= 0.0 || wr <= 1e-12) {
            continue; // too close to estimation noise for a log
        }
        fit.degrees.push_back(d);
        fit.log_ratios.push_back(std::log(wn / wr));
    }
    require(fit.degrees.size() >= 2,
            "fewer than 2 usable degrees after floor filtering");
    std::vector<double> x(fit.degrees.begin(), fit.degrees.end());
    const LinearFit ls = least_squares(x, fit.log_ratios);
    fit.slope = ls.slope;
    fit.intercept = ls.intercept;
    fit.r_squared = ls.r_squared;
    fit.effective_rho = std::exp(ls.slope / 2.0);
    return fit;
}

} // namespace

DecayFit decay_fit(const DegreeProfileEstimate &noisy, const DegreeProfile &ref,
                   int degree_lo, int degree_hi) {
    require(noisy.n == ref.n, "profiles must share the same n");
    return fit_log_ratios(noisy.weight, noisy.std_err, ref.weight, degree_lo,
                          degree_hi);
}

DecayFit decay_fit(const DegreeProfile &noisy, const DegreeProfile &ref,
                   int degree_lo, int degree_hi) {
    require(noisy.n == ref.n, "profiles must share the same n");
    return fit_log_ratios(noisy.weight, {}, ref.weight, degree_lo, degree_hi);
}

double xeb_fidelity(const SampleSet &s, const OutcomeDistribution &ideal) {
    require(s.n() == ideal.n(), "sample set and distribution disagree on n");
    require(!s.empty(), "xeb of an empty sample set");
    double acc = 0.0;
    for (uint32_t x : s.raw()) {
        acc += ideal[x];
    }
    const double mean = acc / static_cast<double>(s.size());
    return std::ldexp(mean, s.n()) - 1.0; // 2^n * mean - 1
}

} // namespace nisqlab
