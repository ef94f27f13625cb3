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

#include <array>
#include <cstdint>

namespace nisqlab {

/// One block of the Philox4x32-10 counter-based generator
/// (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011).
/// Pure function of (counter, key), which is what makes sample streams
/// reproducible under any parallel schedule.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

/// Domain tags keep the streams drawn for different purposes disjoint even
/// when a caller reuses the same seed across stages.
enum class RngStream : uint64_t {
    sample = 1,       // i.i.d. draws from a fixed distribution
    corruption = 2,   // per-sample bit flips
    split = 3,        // bootstrap partitions
    walk = 4,         // random-walk noise schedules
    trajectory = 5,   // per-sample Pauli error trajectories
    circuit = 6,      // random circuit generation
    boolean_input = 7 // probabilistic inputs of Boolean circuits
};

constexpr uint64_t stream_id(RngStream tag, uint64_t index) {
    // index must stay below 2^48; every in-tree caller indexes samples or
    // bootstrap replicates, which are far smaller.
    return (static_cast<uint64_t>(tag) << 48) | index;
}

/// Counter-based random stream. A stream is addressed by (seed, stream id);
/// draws within the stream advance a 64-bit block counter. Streams with
/// distinct ids never overlap, so `Rng(seed, tag, i)` can be created
/// independently for every sample i and consumed in any order.
class Rng {
  public:
    Rng(uint64_t seed, uint64_t stream);
    Rng(uint64_t seed, RngStream tag, uint64_t index)
        : Rng(seed, stream_id(tag, index)) {}

    uint32_t next_u32();
    uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Uniform integer in [0, bound); unbiased via rejection.
    uint64_t next_below(uint64_t bound);

    bool bernoulli(double p) { return next_double() < p; }

  private:
    void refill();

    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 2> stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int pos_ = 4; // buffer exhausted; refill on first draw
};

} // namespace nisqlab
