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
#include <span>
#include <string>
#include <vector>

#include "nisqlab/errors.hpp"

namespace nisqlab {

/// Dense vectors over all 2^n outcomes stay exact and fast in the regime of
/// interest (n around 12-16), so bit counts are capped here.
inline constexpr int kMaxBits = 24;

inline void check_bit_count(int n) {
    require(n >= 1 && n <= kMaxBits,
            "bit count must be in [1, " + std::to_string(kMaxBits) +
                "], got " + std::to_string(n));
}

/// A length-n 0/1 outcome, packed as an unsigned index. Bit i of the index
/// is the value at position i (little-endian; fixed convention, see the
/// format notes in the README).
class BitString {
  public:
    BitString(int n, uint32_t index) : n_(n), index_(index) {
        check_bit_count(n);
        require(index < (1u << n), "bitstring index " + std::to_string(index) +
                                       " out of range for n=" +
                                       std::to_string(n));
    }

    static BitString from_bits(std::span<const int> bits);

    int n() const { return n_; }
    uint32_t index() const { return index_; }
    int bit(int i) const { return static_cast<int>((index_ >> i) & 1u); }

    std::vector<int> bits() const;

    /// Position 0 first: "01" means bit 0 = '0', bit 1 = '1'.
    std::string to_string() const;

    friend bool operator==(const BitString &, const BitString &) = default;

  private:
    int n_;
    uint32_t index_;
};

/// An ordered stream of same-length samples. Order is load-bearing: the
/// stationarity machinery compares stream prefixes against suffixes, so the
/// container never sorts or deduplicates.
class SampleSet {
  public:
    explicit SampleSet(int n, std::string source = {})
        : n_(n), source_(std::move(source)) {
        check_bit_count(n);
    }

    int n() const { return n_; }
    size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

    void push_back(uint32_t index) {
        require(index < (1u << n_), "sample index out of range for n=" +
                                        std::to_string(n_));
        samples_.push_back(index);
    }
    void push_back(const BitString &b) {
        require(b.n() == n_, "sample length mismatch");
        samples_.push_back(b.index());
    }
    void reserve(size_t count) { samples_.reserve(count); }

    /// Pre-sized assignment used by parallel samplers that fill slot i from
    /// worker threads; values are validated in bulk.
    void assign(std::vector<uint32_t> samples);

    uint32_t index_at(size_t i) const { return samples_[i]; }
    BitString at(size_t i) const { return BitString(n_, samples_[i]); }
    const std::vector<uint32_t> &raw() const { return samples_; }

    const std::string &source() const { return source_; }
    void set_source(std::string s) { source_ = std::move(s); }
    const std::optional<uint64_t> &seed() const { return seed_; }
    void set_seed(uint64_t seed) { seed_ = seed; }
    const std::vector<size_t> &batch_boundaries() const { return batches_; }
    void set_batch_boundaries(std::vector<size_t> batches);

    /// False marks data whose original stream order was lost upstream;
    /// order-sensitive statistics refuse such sets.
    bool ordered() const { return ordered_; }
    void set_ordered(bool ordered) { ordered_ = ordered; }

    /// Optional pointer to the circuit document the samples came from.
    const std::string &circuit_ref() const { return circuit_ref_; }
    void set_circuit_ref(std::string ref) { circuit_ref_ = std::move(ref); }

    /// Stream-order concatenation; other must have the same n.
    void extend(const SampleSet &other);

  private:
    int n_;
    std::vector<uint32_t> samples_;
    std::string source_;
    std::optional<uint64_t> seed_;
    std::vector<size_t> batches_;
    bool ordered_ = true;
    std::string circuit_ref_;
};

} // namespace nisqlab
