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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "nisqlab/rng.hpp"
#include "nisqlab/walsh.hpp"

using namespace nisqlab;

namespace {

// Quadratic-time transform straight from the definition; the oracle the
// butterfly is checked against.
std::vector<double> naive_walsh(std::span<const double> values) {
    const size_t len = values.size();
    std::vector<double> coeff(len, 0.0);
    for (size_t s = 0; s < len; ++s) {
        double acc = 0.0;
        for (size_t x = 0; x < len; ++x) {
            const int sign = std::popcount(s & x) % 2 ? -1 : 1;
            acc += sign * values[x];
        }
        coeff[s] = acc / static_cast<double>(len);
    }
    return coeff;
}

std::vector<double> random_density(int n, Rng &rng) {
    std::vector<double> q(size_t{1} << n);
    double total = 0.0;
    for (double &v : q) {
        v = rng.next_double();
        total += v;
    }
    const double scale = static_cast<double>(q.size()) / total;
    for (double &v : q) {
        v *= scale; // normalized density: mean value 1
    }
    return q;
}

OutcomeDistribution random_distribution(int n, Rng &rng) {
    auto q = random_density(n, rng);
    const double inv = 1.0 / static_cast<double>(q.size());
    for (double &v : q) {
        v *= inv;
    }
    return OutcomeDistribution(n, std::move(q));
}

} // namespace

TEST_CASE("fwht trivial spectra") {
    // uniform density: only the empty coefficient survives
    auto flat = fwht(std::vector<double>{1.0, 1.0, 1.0, 1.0});
    CHECK(flat[0] == doctest::Approx(1.0));
    for (size_t s = 1; s < 4; ++s) {
        CHECK(flat[s] == doctest::Approx(0.0));
    }

    // delta at 0...0: every character evaluates to +1
    std::vector<double> delta(8, 0.0);
    delta[0] = 8.0;
    auto spiky = fwht(delta);
    for (size_t s = 0; s < 8; ++s) {
        CHECK(spiky[s] == doctest::Approx(1.0));
    }

    // parity density 1 + chi_full
    std::vector<double> parity(8);
    for (size_t x = 0; x < 8; ++x) {
        parity[x] = 1.0 + (std::popcount(x) % 2 ? -1.0 : 1.0);
    }
    auto spec = fwht(parity);
    CHECK(spec[0] == doctest::Approx(1.0));
    CHECK(spec[7] == doctest::Approx(1.0));
    for (size_t s : {1u, 2u, 3u, 4u, 5u, 6u}) {
        CHECK(spec[s] == doctest::Approx(0.0));
    }
}

TEST_CASE("fwht rejects non-power-of-two input") {
    CHECK_THROWS_AS(fwht(std::vector<double>{1.0, 1.0, 1.0}),
                    ValidationError);
}

TEST_CASE("fwht matches the naive transform for n <= 8") {
    Rng rng(21, RngStream::sample, 0);
    for (int n = 1; n <= 8; ++n) {
        auto q = random_density(n, rng);
        auto fast = fwht(q);
        auto slow = naive_walsh(q);
        for (size_t s = 0; s < slow.size(); ++s) {
            CHECK(std::abs(fast[s] - slow[s]) < 1e-12);
        }
    }
}

TEST_CASE("inverse_fwht round-trips random vectors up to n=12") {
    Rng rng(22, RngStream::sample, 0);
    for (int n : {1, 4, 8, 12}) {
        auto q = random_density(n, rng);
        auto back = inverse_fwht(fwht(q));
        for (size_t x = 0; x < q.size(); ++x) {
            CHECK(std::abs(back[x] - q[x]) < 1e-12);
        }
    }
    WalshSpectrum zero{2, {0.0, 0.0, 0.0, 0.0}};
    for (double v : inverse_fwht(zero)) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("fwht is linear") {
    Rng rng(23, RngStream::sample, 0);
    auto u = random_density(6, rng);
    auto v = random_density(6, rng);
    const double a = 0.37, b = -1.91;
    std::vector<double> mix(u.size());
    for (size_t x = 0; x < u.size(); ++x) {
        mix[x] = a * u[x] + b * v[x];
    }
    auto su = fwht(u);
    auto sv = fwht(v);
    auto sm = fwht(mix);
    for (size_t s = 0; s < u.size(); ++s) {
        CHECK(std::abs(sm[s] - (a * su[s] + b * sv[s])) < 1e-12);
    }
}

TEST_CASE("parseval holds for 1000 random densities up to n=12") {
    Rng rng(24, RngStream::sample, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(12));
        auto p = random_distribution(n, rng);
        auto spec = spectrum_of(p);
        double direct = 0.0;
        const double dim = std::ldexp(1.0, n);
        for (size_t x = 0; x < p.size(); ++x) {
            const double q = dim * p[x];
            direct += q * q;
        }
        direct /= dim;
        CHECK(std::abs(spec.parseval_mass() - direct) < 1e-9);
        CHECK(std::abs(spec[0] - 1.0) < 1e-10);
        for (size_t s = 0; s < spec.coefficients.size(); ++s) {
            CHECK(std::abs(spec[s]) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("degree profile of uniform and delta distributions") {
    auto uniform = degree_profile(spectrum_of(OutcomeDistribution::uniform(4)));
    CHECK(uniform.weight[0] == doctest::Approx(1.0));
    for (int d = 1; d <= 4; ++d) {
        CHECK(uniform.weight[d] == doctest::Approx(0.0));
    }

    auto delta = degree_profile(spectrum_of(OutcomeDistribution::delta(4, 0)));
    const double binom[5] = {1, 4, 6, 4, 1};
    for (int d = 0; d <= 4; ++d) {
        CHECK(delta.weight[d] == doctest::Approx(binom[d]));
    }
    CHECK(delta.total() == doctest::Approx(16.0));
}

TEST_CASE("stable/sensitive split recomposes exactly") {
    Rng rng(25, RngStream::sample, 0);
    auto spec = spectrum_of(random_distribution(6, rng));
    for (int cutoff : {0, 2, 6}) {
        auto [low, high] = stable_sensitive_split(spec, cutoff);
        for (size_t s = 0; s < spec.coefficients.size(); ++s) {
            const int d = std::popcount(s);
            CHECK(low[s] + high[s] == doctest::Approx(spec[s]).epsilon(1e-12));
            if (d <= cutoff) {
                CHECK(high[s] == 0.0);
            } else {
                CHECK(low[s] == 0.0);
            }
        }
    }
    auto [low_all, high_all] = stable_sensitive_split(spec, 6);
    CHECK(high_all.parseval_mass() == 0.0);
    auto [low_zero, high_zero] = stable_sensitive_split(spec, 0);
    CHECK(low_zero.parseval_mass() == doctest::Approx(1.0)); // only S = {}
}

TEST_CASE("noise stability endpoints and monotone sandwich") {
    Rng rng(26, RngStream::sample, 0);
    for (int trial = 0; trial < 20; ++trial) {
        auto spec = spectrum_of(random_distribution(5, rng));
        auto profile = degree_profile(spec);
        CHECK(noise_stability(spec, 1.0) ==
              doctest::Approx(spec.parseval_mass()));
        CHECK(noise_stability(spec, 0.0) == doctest::Approx(profile.weight[0]));
        const double mid = noise_stability(spec, 0.5);
        CHECK(mid <= noise_stability(spec, 1.0) + 1e-12);
        CHECK(mid >= noise_stability(spec, 0.0) - 1e-12);
    }
}
