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

#include <span>
#include <utility>
#include <vector>

#include "nisqlab/distribution.hpp"

namespace nisqlab {

/// Walsh coefficients of a function on {0,1}^n, indexed by the subset
/// bitmask S. With the parity characters chi_S(x) = (-1)^{sum_{i in S} x_i},
///
///     coefficient(S) = 2^{-n} * sum_x f(x) * chi_S(x).
///
/// Spectra of probability distributions are taken on the normalized density
/// q(x) = 2^n * p(x), so coefficient({}) = 1 for every distribution and
/// degree profiles are comparable across n.
struct WalshSpectrum {
    int n = 0;
    std::vector<double> coefficients; // size 2^n, index = subset mask

    double operator[](size_t s) const { return coefficients[s]; }

    /// sum_S coefficient(S)^2. By Parseval this equals 2^{-n} sum_x f(x)^2.
    double parseval_mass() const;
};

/// Per-degree totals W_d = sum_{|S|=d} coefficient(S)^2.
struct DegreeProfile {
    int n = 0;
    std::vector<double> weight; // size n+1

    double total() const;
};

/// In-place butterfly transform, O(n 2^n). Input length must be a power of
/// two. The input is a table of function values (for distributions, pass the
/// density q = 2^n p, or use spectrum_of).
WalshSpectrum fwht(std::span<const double> values);

/// Reconstructs the value table: f(x) = sum_S coefficient(S) chi_S(x).
/// inverse_fwht(fwht(v)) == v within float roundoff.
std::vector<double> inverse_fwht(const WalshSpectrum &spectrum);

/// Spectrum of the normalized density of p.
WalshSpectrum spectrum_of(const OutcomeDistribution &p);

/// Distribution with normalized density sum_S coefficient(S) chi_S; entries
/// must come out nonnegative within float tolerance.
OutcomeDistribution distribution_of(const WalshSpectrum &spectrum);

DegreeProfile degree_profile(const WalshSpectrum &spectrum);

/// Splits into (coefficients with |S| <= cutoff_degree, the rest). The two
/// parts sum back to the original spectrum coefficientwise.
std::pair<WalshSpectrum, WalshSpectrum>
stable_sensitive_split(const WalshSpectrum &spectrum, int cutoff_degree);

/// sum_d rho^d W_d: the correlation functional whose decay in rho separates
/// noise-stable from noise-sensitive spectra.
double noise_stability(const WalshSpectrum &spectrum, double rho);

} // namespace nisqlab
