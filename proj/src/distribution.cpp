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

#include "nisqlab/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace nisqlab {

OutcomeDistribution::OutcomeDistribution(int n, std::vector<double> p)
    : n_(n), p_(std::move(p)) {
    check_bit_count(n);
    require(p_.size() == (size_t{1} << n),
            "distribution must have 2^n entries");
    double total = 0.0;
    for (double &v : p_) {
        require(v >= -1e-12, "distribution entries must be nonnegative");
        if (v < 0.0) {
            v = 0.0;
        }
        total += v;
    }
    require(std::abs(total - 1.0) < 1e-9,
            "distribution must sum to 1, got " + std::to_string(total));
}

OutcomeDistribution OutcomeDistribution::uniform(int n) {
    check_bit_count(n);
    size_t dim = size_t{1} << n;
    return OutcomeDistribution(
        n, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

OutcomeDistribution OutcomeDistribution::delta(int n, uint32_t index) {
    check_bit_count(n);
    size_t dim = size_t{1} << n;
    require(index < dim, "delta index out of range");
    std::vector<double> p(dim, 0.0);
    p[index] = 1.0;
    return OutcomeDistribution(n, std::move(p));
}

std::vector<int64_t> outcome_counts(const SampleSet &s, size_t prefix) {
    require(prefix <= s.size(), "prefix exceeds sample count");
    std::vector<int64_t> counts(size_t{1} << s.n(), 0);
    const auto &raw = s.raw();
    for (size_t i = 0; i < prefix; ++i) {
        ++counts[raw[i]];
    }
    return counts;
}

std::vector<int64_t> outcome_counts(const SampleSet &s) {
    return outcome_counts(s, s.size());
}

OutcomeDistribution empirical_distribution(const SampleSet &s) {
    require(!s.empty(), "empirical_distribution: empty input");
    auto counts = outcome_counts(s);
    std::vector<double> p(counts.size());
    const double inv = 1.0 / static_cast<double>(s.size());
    for (size_t x = 0; x < counts.size(); ++x) {
        p[x] = static_cast<double>(counts[x]) * inv;
    }
    return OutcomeDistribution(s.n(), std::move(p));
}

namespace {

void check_same_n(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    require(p.n() == q.n(), "distance requires distributions over the same n");
}

} // namespace

double tv_distance(const OutcomeDistribution &p,
                   const OutcomeDistribution &q) {
    check_same_n(p, q);
    double total = 0.0;
    for (size_t x = 0; x < p.size(); ++x) {
        total += std::abs(p[x] - q[x]);
    }
    return 0.5 * total;
}

double l2_distance(const OutcomeDistribution &p,
                   const OutcomeDistribution &q) {
    check_same_n(p, q);
    double total = 0.0;
    for (size_t x = 0; x < p.size(); ++x) {
        double d = p[x] - q[x];
        total += d * d;
    }
    return std::sqrt(total);
}

DistributionSampler::DistributionSampler(const OutcomeDistribution &p)
    : cumulative_(p.size()) {
    double acc = 0.0;
    for (size_t x = 0; x < p.size(); ++x) {
        acc += p[x];
        cumulative_[x] = acc;
    }
    cumulative_.back() = 1.0; // guard against float shortfall at the tail
}

uint32_t DistributionSampler::draw(Rng &rng) const {
    double u = rng.next_double();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<uint32_t>(it - cumulative_.begin());
}

SampleSet draw_iid(const OutcomeDistribution &p, size_t count, uint64_t seed,
                   std::string source) {
    require(count >= 1, "sample count must be at least 1");
    DistributionSampler sampler(p);
    std::vector<uint32_t> samples(count);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        Rng rng(seed, RngStream::sample, static_cast<uint64_t>(i));
        samples[static_cast<size_t>(i)] = sampler.draw(rng);
    }
    SampleSet out(p.n(), std::move(source));
    out.assign(std::move(samples));
    out.set_seed(seed);
    return out;
}

} // namespace nisqlab
