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

namespace nisqlab {

/// Gate-level noise: symmetric depolarizing applied to every participating
/// qubit after each gate, plus an optional independent readout flip per bit.
struct GateNoise {
    double r1 = 0.0;          // depolarizing rate after single-qubit gates
    double r2 = 0.0;          // depolarizing rate after two-qubit gates
    double eps_readout = 0.0; // per-bit readout flip probability

    void validate() const;
    bool zero() const { return r1 == 0.0 && r2 == 0.0 && eps_readout == 0.0; }
};

/// Distribution-level noise: independent per-bit flips with probability eps.
/// Its spectral action multiplies the degree-d Walsh coefficients by rho^d
/// with rho = 1 - 2 eps, which is the exponential high-degree suppression
/// this toolkit is built to measure. eps is capped at 0.5; beyond that the
/// map is anti-correlated and outside the regime of interest.
class DistributionNoise {
  public:
    explicit DistributionNoise(double eps);

    double eps() const { return eps_; }
    double rho() const { return 1.0 - 2.0 * eps_; }

  private:
    double eps_;
};

/// Which noise parameter a schedule drives; determines the legal range the
/// emitted values are clamped to.
enum class ScheduleTarget {
    gate_rates,  // replaces both r1 and r2, clamp [0, 1]
    r1,          // clamp [0, 1]
    r2,          // clamp [0, 1]
    readout,     // clamp [0, 0.5]
    bitflip_eps, // distribution-level eps, clamp [0, 0.5]
};

ScheduleTarget parse_schedule_target(const std::string &name);
const char *schedule_target_name(ScheduleTarget target);

/// A rate as a function of normalized stream position in [0, 1].
/// Parameterizing by position rather than wall clock keeps the drift shape
/// independent of the sample count.
class NoiseSchedule {
  public:
    enum class Kind { constant, linear, sinusoid, random_walk };

    static NoiseSchedule constant(double value,
                                  ScheduleTarget target = ScheduleTarget::gate_rates);
    static NoiseSchedule linear(double from, double to,
                                ScheduleTarget target = ScheduleTarget::gate_rates);
    static NoiseSchedule sinusoid(double mean, double amplitude, double period,
                                  ScheduleTarget target = ScheduleTarget::gate_rates);
    /// Bounded walk: value moves by +-step on a fixed grid of 4096
    /// increments, clamped to the target's legal range at every step.
    /// Deterministic given its own seed.
    static NoiseSchedule random_walk(double start, double step, uint64_t seed,
                                     ScheduleTarget target = ScheduleTarget::gate_rates);

    Kind kind() const { return kind_; }
    ScheduleTarget target() const { return target_; }
    const std::vector<double> &params() const { return params_; }
    uint64_t walk_seed() const { return walk_seed_; }

    /// Rate at the given stream position; position outside [0, 1] is an
    /// error, and the result is always inside the target's legal range.
    double value_at(double position) const;

  private:
    NoiseSchedule(Kind kind, ScheduleTarget target, std::vector<double> params,
                  uint64_t walk_seed);

    double clamp_lo() const;
    double clamp_hi() const;

    Kind kind_;
    ScheduleTarget target_;
    std::vector<double> params_;
    uint64_t walk_seed_ = 0;
    std::vector<double> walk_values_; // precomputed grid for random_walk
};

/// Free-function form of NoiseSchedule::value_at.
double schedule_value(const NoiseSchedule &schedule, double position);

/// Convolution of p with independent per-bit flips. Implemented spectrally:
/// coefficient(S) -> rho^{|S|} coefficient(S).
OutcomeDistribution apply_bitflip_noise(const OutcomeDistribution &p,
                                        const DistributionNoise &noise);

/// Flips each bit of each sample independently with probability eps.
/// Stream order is preserved; sample i uses the stream keyed (seed, i).
SampleSet corrupt_samples(const SampleSet &s, const DistributionNoise &noise,
                          uint64_t seed);

/// Same, with eps drifting over the stream: sample i is corrupted at
/// eps = schedule(position of i). The schedule must target bitflip_eps.
SampleSet corrupt_samples(const SampleSet &s, const NoiseSchedule &schedule,
                          uint64_t seed);

/// Normalized stream position of sample i among count samples: i/(count-1),
/// so the first sample sits at 0 and the last at 1.
double stream_position(size_t index, size_t count);

} // namespace nisqlab
