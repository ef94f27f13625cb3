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

#include "nisqlab/boolsim.hpp"

namespace nisqlab {

BooleanCircuit::BooleanCircuit(int input_count, std::vector<BoolGate> gates,
                               std::vector<int> outputs)
    : input_count_(input_count), gates_(std::move(gates)),
      outputs_(std::move(outputs)) {
    require(input_count_ >= 1, "circuit needs at least one input wire");
    int defined = input_count_;
    for (const BoolGate &g : gates_) {
        require(g.a >= 0 && g.a < defined,
                "gate references undefined wire " + std::to_string(g.a));
        if (g.kind == BoolGateKind::and_gate) {
            require(g.b >= 0 && g.b < defined,
                    "gate references undefined wire " + std::to_string(g.b));
        }
        ++defined;
    }
    require(!outputs_.empty(), "circuit needs at least one output");
    require(outputs_.size() <= static_cast<size_t>(kMaxBits),
            "at most " + std::to_string(kMaxBits) + " output wires");
    for (int w : outputs_) {
        require(w >= 0 && w < defined,
                "output references undefined wire " + std::to_string(w));
    }
}

BitSource::BitSource(int count) : prob_one_(static_cast<size_t>(count), 0.0) {
    require(count >= 1, "bit source needs at least one wire");
}

BitSource BitSource::bernoulli(int count, double p) {
    BitSource src(count);
    for (int i = 0; i < count; ++i) {
        src.set_bernoulli(i, p);
    }
    return src;
}

void BitSource::set_fixed(int wire, int bit) {
    require(bit == 0 || bit == 1, "fixed bit must be 0 or 1");
    prob_one_.at(wire) = static_cast<double>(bit);
}

void BitSource::set_bernoulli(int wire, double p) {
    require(p >= 0.0 && p <= 1.0, "probability must be in [0, 1]");
    prob_one_.at(wire) = p;
}

namespace {

uint32_t run_gates(const BooleanCircuit &circuit, uint32_t input_bits,
                   std::vector<uint8_t> &wires) {
    const int k = circuit.input_count();
    wires.resize(static_cast<size_t>(circuit.wire_count()));
    for (int i = 0; i < k; ++i) {
        wires[i] = static_cast<uint8_t>((input_bits >> i) & 1u);
    }
    int next = k;
    for (const BoolGate &g : circuit.gates()) {
        if (g.kind == BoolGateKind::not_gate) {
            wires[next] = static_cast<uint8_t>(1u - wires[g.a]);
        } else {
            wires[next] = static_cast<uint8_t>(wires[g.a] & wires[g.b]);
        }
        ++next;
    }
    uint32_t out = 0;
    const auto &outputs = circuit.outputs();
    for (size_t j = 0; j < outputs.size(); ++j) {
        out |= static_cast<uint32_t>(wires[outputs[j]]) << j;
    }
    return out;
}

} // namespace

BitString evaluate(const BooleanCircuit &circuit, const BitString &input) {
    require(input.n() == circuit.input_count(),
            "input length does not match the circuit's input count");
    std::vector<uint8_t> wires;
    uint32_t out = run_gates(circuit, input.index(), wires);
    return BitString(static_cast<int>(circuit.outputs().size()), out);
}

OutcomeDistribution output_distribution(const BooleanCircuit &circuit,
                                        const BitSource &source) {
    const int k = circuit.input_count();
    require(k <= 20, "exhaustive enumeration is limited to 20 inputs; "
                     "use sample_outputs instead");
    require(source.size() == k, "source size does not match input count");
    const size_t n_out = circuit.outputs().size();
    std::vector<double> p(size_t{1} << n_out, 0.0);
    std::vector<uint8_t> wires;
    const uint32_t total = 1u << k;
    for (uint32_t input = 0; input < total; ++input) {
        double weight = 1.0;
        for (int i = 0; i < k; ++i) {
            double p1 = source.prob_one(i);
            weight *= ((input >> i) & 1u) ? p1 : (1.0 - p1);
            if (weight == 0.0) {
                break;
            }
        }
        if (weight == 0.0) {
            continue;
        }
        p[run_gates(circuit, input, wires)] += weight;
    }
    return OutcomeDistribution(static_cast<int>(n_out), std::move(p));
}

SampleSet sample_outputs(const BooleanCircuit &circuit,
                         const BitSource &source, size_t count,
                         uint64_t seed) {
    require(count >= 1, "sample count must be at least 1");
    require(source.size() == circuit.input_count(),
            "source size does not match input count");
    const int k = circuit.input_count();
    std::vector<uint32_t> samples(count);
#pragma omp parallel
    {
        std::vector<uint8_t> wires;
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            Rng rng(seed, RngStream::boolean_input, static_cast<uint64_t>(i));
            uint32_t input = 0;
            for (int w = 0; w < k; ++w) {
                if (rng.bernoulli(source.prob_one(w))) {
                    input |= 1u << w;
                }
            }
            samples[static_cast<size_t>(i)] = run_gates(circuit, input, wires);
        }
    }
    SampleSet out(static_cast<int>(circuit.outputs().size()),
                  "boolean-circuit");
    out.assign(std::move(samples));
    out.set_seed(seed);
    return out;
}

} // namespace nisqlab
