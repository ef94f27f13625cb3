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

#include "nisqlab/bitstring.hpp"

#include <algorithm>

namespace nisqlab {

BitString BitString::from_bits(std::span<const int> bits) {
    check_bit_count(static_cast<int>(bits.size()));
    uint32_t index = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        require(bits[i] == 0 || bits[i] == 1, "bits must be 0 or 1");
        index |= static_cast<uint32_t>(bits[i]) << i;
    }
    return BitString(static_cast<int>(bits.size()), index);
}

std::vector<int> BitString::bits() const {
    std::vector<int> out(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<size_t>(i)] = bit(i);
    }
    return out;
}

std::string BitString::to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
        s[static_cast<size_t>(i)] = bit(i) ? '1' : '0';
    }
    return s;
}

void SampleSet::assign(std::vector<uint32_t> samples) {
    const uint32_t limit = 1u << n_;
    for (uint32_t v : samples) {
        require(v < limit, "sample index out of range for n=" +
                               std::to_string(n_));
    }
    samples_ = std::move(samples);
}

void SampleSet::set_batch_boundaries(std::vector<size_t> batches) {
    require(std::is_sorted(batches.begin(), batches.end()) &&
                std::adjacent_find(batches.begin(), batches.end()) ==
                    batches.end(),
            "batch boundaries must be strictly increasing");
    batches_ = std::move(batches);
}

void SampleSet::extend(const SampleSet &other) {
    require(other.n_ == n_, "cannot concatenate sample sets with different n");
    samples_.insert(samples_.end(), other.samples_.begin(),
                    other.samples_.end());
}

} // namespace nisqlab
