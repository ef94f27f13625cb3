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

#include "nisqlab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "nisqlab/errors.hpp"

namespace nisqlab {

namespace {

// Lower-tail series expansion of P(a, x).
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int k = 0; k < 500; ++k) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper-tail Lentz continued fraction for Q(a, x).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k < 500; ++k) {
        const double an = -k * (k - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) {
            break;
        }
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_q(double a, double x) {
    require(a > 0.0 && x >= 0.0, "gamma_q requires a > 0, x >= 0");
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

double chi_square_sf(double statistic, double df) {
    return gamma_q(df / 2.0, statistic / 2.0);
}

double chi_square_gof_pvalue(std::span<const int64_t> observed,
                             std::span<const double> expected_probability,
                             double min_expected) {
    require(observed.size() == expected_probability.size(),
            "observed/expected size mismatch");
    int64_t total = 0;
    for (int64_t c : observed) {
        total += c;
    }
    require(total > 0, "empty observation vector");

    // Pool small-expectation bins left to right.
    std::vector<double> exp_counts;
    std::vector<double> obs_counts;
    double exp_acc = 0.0;
    double obs_acc = 0.0;
    for (size_t i = 0; i < observed.size(); ++i) {
        exp_acc += expected_probability[i] * static_cast<double>(total);
        obs_acc += static_cast<double>(observed[i]);
        if (exp_acc >= min_expected) {
            exp_counts.push_back(exp_acc);
            obs_counts.push_back(obs_acc);
            exp_acc = 0.0;
            obs_acc = 0.0;
        }
    }
    if (exp_acc > 0.0 || obs_acc > 0.0) {
        if (exp_counts.empty()) {
            exp_counts.push_back(exp_acc);
            obs_counts.push_back(obs_acc);
        } else {
            exp_counts.back() += exp_acc;
            obs_counts.back() += obs_acc;
        }
    }
    require(exp_counts.size() >= 2, "need at least two bins after pooling");

    double stat = 0.0;
    for (size_t i = 0; i < exp_counts.size(); ++i) {
        const double d = obs_counts[i] - exp_counts[i];
        stat += d * d / exp_counts[i];
    }
    return chi_square_sf(stat, static_cast<double>(exp_counts.size() - 1));
}

double ks_uniform_statistic(std::vector<double> values) {
    require(!values.empty(), "KS statistic of an empty sample");
    std::sort(values.begin(), values.end());
    const double m = static_cast<double>(values.size());
    double worst = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        const double lo = static_cast<double>(i) / m;
        const double hi = static_cast<double>(i + 1) / m;
        worst = std::max(worst, std::abs(values[i] - lo));
        worst = std::max(worst, std::abs(values[i] - hi));
    }
    return worst;
}

double ks_critical_value(size_t sample_count, double level) {
    require(sample_count > 0 && level > 0.0 && level < 1.0,
            "bad KS parameters");
    return std::sqrt(-std::log(level / 2.0) /
                     (2.0 * static_cast<double>(sample_count)));
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
    require(x.size() == y.size() && x.size() >= 2,
            "least squares needs at least two points");
    const double m = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    require(sxx > 0.0, "least squares needs at least two distinct x values");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy <= 0.0) {
        fit.r_squared = 1.0;
    } else {
        const double ss_res = syy - fit.slope * sxy;
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

} // namespace nisqlab
