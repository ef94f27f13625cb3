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

#include "nisqlab/bitstring.hpp"
#include "nisqlab/rng.hpp"

namespace nisqlab {

/// Dense probability vector over all 2^n outcomes. Entries are validated to
/// be nonnegative (tiny negative float residue, above -1e-12, is clamped to
/// zero) and to sum to 1 within 1e-9.
class OutcomeDistribution {
  public:
    OutcomeDistribution(int n, std::vector<double> p);

    static OutcomeDistribution uniform(int n);
    static OutcomeDistribution delta(int n, uint32_t index);

    int n() const { return n_; }
    size_t size() const { return p_.size(); }
    double operator[](size_t x) const { return p_[x]; }
    const std::vector<double> &probabilities() const { return p_; }

  private:
    int n_;
    std::vector<double> p_;
};

/// Counts to frequencies. Counts accumulate in 64-bit integers, so streams of
/// 10^6+ samples normalize without float accumulation error.
OutcomeDistribution empirical_distribution(const SampleSet &s);

/// Raw per-outcome counts of the first `prefix` samples (the whole stream by
/// default). Shared by the empirical distribution and the split statistics.
std::vector<int64_t> outcome_counts(const SampleSet &s, size_t prefix);
std::vector<int64_t> outcome_counts(const SampleSet &s);

/// (1/2) sum_x |p[x] - q[x]|; in [0, 1].
double tv_distance(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// sqrt(sum_x (p[x] - q[x])^2).
double l2_distance(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Inverse-CDF sampler over a fixed distribution. Each draw takes one
/// uniform from the caller's stream, so parallel callers with per-sample
/// streams reproduce the same stream order.
class DistributionSampler {
  public:
    explicit DistributionSampler(const OutcomeDistribution &p);
    uint32_t draw(Rng &rng) const;

  private:
    std::vector<double> cumulative_;
};

/// count i.i.d. draws from p, deterministic given seed (sample i uses the
/// stream keyed (seed, sample, i)).
SampleSet draw_iid(const OutcomeDistribution &p, size_t count, uint64_t seed,
                   std::string source);

} // namespace nisqlab
