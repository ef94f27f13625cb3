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
#include <vector>

#include "nisqlab/bitstring.hpp"
#include "nisqlab/distribution.hpp"

namespace nisqlab {

/// The classical baseline: circuits over exactly NOT and AND. Each gate
/// reads previously defined wires and defines a new one, so the circuit is a
/// DAG by construction. Wires are single-assignment with unlimited fan-out.
enum class BoolGateKind { not_gate, and_gate };

struct BoolGate {
    BoolGateKind kind;
    int a = 0; // input wire
    int b = 0; // second input wire (AND only)
};

class BooleanCircuit {
  public:
    BooleanCircuit(int input_count, std::vector<BoolGate> gates,
                   std::vector<int> outputs);

    int input_count() const { return input_count_; }
    int wire_count() const {
        return input_count_ + static_cast<int>(gates_.size());
    }
    const std::vector<BoolGate> &gates() const { return gates_; }
    const std::vector<int> &outputs() const { return outputs_; }

  private:
    int input_count_;
    std::vector<BoolGate> gates_;
    std::vector<int> outputs_;
};

/// Per-wire input model: independent bits, each fixed or Bernoulli(p) with
/// p the probability of the value one.
class BitSource {
  public:
    explicit BitSource(int count);
    static BitSource bernoulli(int count, double p);

    void set_fixed(int wire, int bit);
    void set_bernoulli(int wire, double p);

    int size() const { return static_cast<int>(prob_one_.size()); }
    double prob_one(int wire) const { return prob_one_.at(wire); }

  private:
    std::vector<double> prob_one_;
};

/// Deterministic gate-by-gate evaluation; output has |outputs| bits.
BitString evaluate(const BooleanCircuit &circuit, const BitString &input);

/// Exact output distribution by enumerating all inputs weighted by source
/// probabilities. Limited to 20 inputs; beyond that use sample_outputs.
OutcomeDistribution output_distribution(const BooleanCircuit &circuit,
                                        const BitSource &source);

/// count i.i.d. samples of the circuit's output under the source,
/// deterministic given seed.
SampleSet sample_outputs(const BooleanCircuit &circuit,
                         const BitSource &source, size_t count, uint64_t seed);

} // namespace nisqlab
