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

#include "nisqlab/walsh.hpp"

#include <bit>
#include <cmath>

namespace nisqlab {

namespace {

int log2_exact(size_t len) {
    require(len >= 2 && std::has_single_bit(len),
            "transform length must be a power of two, got " +
                std::to_string(len));
    return std::countr_zero(len);
}

// Unnormalized butterfly; self-inverse up to a factor of len.
void butterfly(std::vector<double> &v) {
    const size_t len = v.size();
    for (size_t stride = 1; stride < len; stride <<= 1) {
        for (size_t base = 0; base < len; base += 2 * stride) {
            for (size_t j = base; j < base + stride; ++j) {
                double a = v[j];
                double b = v[j + stride];
                v[j] = a + b;
                v[j + stride] = a - b;
            }
        }
    }
}

} // namespace

double WalshSpectrum::parseval_mass() const {
    double total = 0.0;
    for (double c : coefficients) {
        total += c * c;
    }
    return total;
}

double DegreeProfile::total() const {
    double t = 0.0;
    for (double w : weight) {
        t += w;
    }
    return t;
}

WalshSpectrum fwht(std::span<const double> values) {
    const int n = log2_exact(values.size());
    std::vector<double> coeff(values.begin(), values.end());
    butterfly(coeff);
    const double scale = 1.0 / static_cast<double>(values.size());
    for (double &c : coeff) {
        c *= scale;
    }
    return WalshSpectrum{n, std::move(coeff)};
}

std::vector<double> inverse_fwht(const WalshSpectrum &spectrum) {
    require(spectrum.coefficients.size() == (size_t{1} << spectrum.n),
            "spectrum has wrong length for its n");
    std::vector<double> values = spectrum.coefficients;
    butterfly(values);
    return values;
}

WalshSpectrum spectrum_of(const OutcomeDistribution &p) {
    // q = 2^n p, and the 2^n cancels the transform normalization: the
    // coefficient of S is just E_p[chi_S].
    std::vector<double> coeff = p.probabilities();
    butterfly(coeff);
    return WalshSpectrum{p.n(), std::move(coeff)};
}

OutcomeDistribution distribution_of(const WalshSpectrum &spectrum) {
    std::vector<double> q = inverse_fwht(spectrum);
    const double scale = 1.0 / static_cast<double>(q.size());
    for (double &v : q) {
        v *= scale;
    }
    return OutcomeDistribution(spectrum.n, std::move(q));
}

DegreeProfile degree_profile(const WalshSpectrum &spectrum) {
    DegreeProfile profile{spectrum.n,
                          std::vector<double>(spectrum.n + 1, 0.0)};
    for (size_t s = 0; s < spectrum.coefficients.size(); ++s) {
        double c = spectrum.coefficients[s];
        profile.weight[std::popcount(s)] += c * c;
    }
    return profile;
}

std::pair<WalshSpectrum, WalshSpectrum>
stable_sensitive_split(const WalshSpectrum &spectrum, int cutoff_degree) {
    require(cutoff_degree >= 0 && cutoff_degree <= spectrum.n,
            "cutoff degree must be in [0, n]");
    WalshSpectrum low{spectrum.n,
                      std::vector<double>(spectrum.coefficients.size(), 0.0)};
    WalshSpectrum high = low;
    for (size_t s = 0; s < spectrum.coefficients.size(); ++s) {
        if (std::popcount(s) <= cutoff_degree) {
            low.coefficients[s] = spectrum.coefficients[s];
        } else {
            high.coefficients[s] = spectrum.coefficients[s];
        }
    }
    return {std::move(low), std::move(high)};
}

double noise_stability(const WalshSpectrum &spectrum, double rho) {
    require(rho >= 0.0 && rho <= 1.0, "rho must be in [0, 1]");
    DegreeProfile profile = degree_profile(spectrum);
    double value = 0.0;
    double rho_d = 1.0;
    for (int d = 0; d <= profile.n; ++d) {
        value += rho_d * profile.weight[d];
        rho_d *= rho;
    }
    return value;
}

} // namespace nisqlab
