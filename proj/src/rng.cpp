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

#include "nisqlab/rng.hpp"

namespace nisqlab {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hilo(uint32_t a, uint32_t b, uint32_t &lo, uint32_t &hi) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    lo = static_cast<uint32_t>(p);
    hi = static_cast<uint32_t>(p >> 32);
}

inline void philox_round(std::array<uint32_t, 4> &x,
                         const std::array<uint32_t, 2> &key) {
    uint32_t lo0, hi0, lo1, hi1;
    mul_hilo(kPhiloxM0, x[0], lo0, hi0);
    mul_hilo(kPhiloxM1, x[2], lo1, hi1);
    x = {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
}

} // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        philox_round(counter, key);
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return counter;
}

Rng::Rng(uint64_t seed, uint64_t stream)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
      stream_{static_cast<uint32_t>(stream),
              static_cast<uint32_t>(stream >> 32)} {}

void Rng::refill() {
    buffer_ = philox4x32({static_cast<uint32_t>(block_),
                          static_cast<uint32_t>(block_ >> 32), stream_[0],
                          stream_[1]},
                         key_);
    ++block_;
    pos_ = 0;
}

uint32_t Rng::next_u32() {
    if (pos_ == 4) {
        refill();
    }
    return buffer_[pos_++];
}

uint64_t Rng::next_u64() {
    uint64_t lo = next_u32();
    uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t Rng::next_below(uint64_t bound) {
    // Classic rejection: discard draws below 2^64 mod bound.
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = next_u64();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

} // namespace nisqlab
