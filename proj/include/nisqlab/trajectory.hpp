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
#include <optional>

#include "nisqlab/circuit.hpp"
#include "nisqlab/distribution.hpp"
#include "nisqlab/noise.hpp"

namespace nisqlab {

inline constexpr int kMaxTrajectoryBits = 20;

/// Monte Carlo noisy sampling for circuits too large for the density-matrix
/// backend. Each sample is one trajectory: noise rates are read off the
/// schedule at the sample's stream position, a Pauli error pattern is drawn
/// (uniform X/Y/Z with probability 3r/4 per participating qubit after each
/// layer, which reproduces the depolarizing channel exactly), the pure state
/// is simulated, and one measurement is taken, followed by readout flips.
///
/// Sample i draws only from the stream keyed (seed, i), so the stream order
/// is reproduced under any parallel schedule. When `schedule` is present it
/// overrides its target parameter; other parameters stay at `noise`.
SampleSet sample_trajectories(const QuantumCircuit &circuit,
                              const GateNoise &noise,
                              const std::optional<NoiseSchedule> &schedule,
                              size_t count, uint64_t seed);

} // namespace nisqlab
