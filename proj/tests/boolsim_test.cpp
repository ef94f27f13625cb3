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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "nisqlab/boolsim.hpp"

using namespace nisqlab;

namespace {

BitString bits(std::initializer_list<int> values) {
    std::vector<int> v(values);
    return BitString::from_bits(v);
}

// Truth-table oracle: evaluate wires recursively from the definition,
// independent of the library's evaluator.
int oracle_wire(const BooleanCircuit &c, uint32_t input, int wire) {
    if (wire < c.input_count()) {
        return static_cast<int>((input >> wire) & 1u);
    }
    const BoolGate &g = c.gates()[static_cast<size_t>(wire - c.input_count())];
    if (g.kind == BoolGateKind::not_gate) {
        return 1 - oracle_wire(c, input, g.a);
    }
    return oracle_wire(c, input, g.a) & oracle_wire(c, input, g.b);
}

uint32_t oracle_outputs(const BooleanCircuit &c, uint32_t input) {
    uint32_t out = 0;
    for (size_t j = 0; j < c.outputs().size(); ++j) {
        out |= static_cast<uint32_t>(oracle_wire(c, input, c.outputs()[j]))
               << j;
    }
    return out;
}

BooleanCircuit random_circuit(int inputs, int gate_count, int output_count,
                              Rng &rng) {
    std::vector<BoolGate> gates;
    int defined = inputs;
    for (int i = 0; i < gate_count; ++i) {
        BoolGate g;
        if (rng.bernoulli(0.4)) {
            g.kind = BoolGateKind::not_gate;
            g.a = static_cast<int>(rng.next_below(defined));
        } else {
            g.kind = BoolGateKind::and_gate;
            g.a = static_cast<int>(rng.next_below(defined));
            g.b = static_cast<int>(rng.next_below(defined));
        }
        gates.push_back(g);
        ++defined;
    }
    std::vector<int> outputs;
    for (int j = 0; j < output_count; ++j) {
        outputs.push_back(static_cast<int>(rng.next_below(defined)));
    }
    return BooleanCircuit(inputs, std::move(gates), std::move(outputs));
}

// OR via De Morgan: x OR y = NOT(AND(NOT x, NOT y)). Returns the wire index.
int build_or(std::vector<BoolGate> &gates, int inputs, int a, int b) {
    const int base = inputs + static_cast<int>(gates.size());
    gates.push_back({BoolGateKind::not_gate, a, 0});     // base: !a
    gates.push_back({BoolGateKind::not_gate, b, 0});     // base+1: !b
    gates.push_back({BoolGateKind::and_gate, base, base + 1});
    gates.push_back({BoolGateKind::not_gate, base + 2, 0});
    return base + 3;
}

} // namespace

TEST_CASE("gate semantics: AND and NOT") {
    BooleanCircuit and_circuit(2, {{BoolGateKind::and_gate, 0, 1}}, {2});
    CHECK(evaluate(and_circuit, bits({1, 1})).index() == 1);
    CHECK(evaluate(and_circuit, bits({1, 0})).index() == 0);
    CHECK(evaluate(and_circuit, bits({0, 1})).index() == 0);
    CHECK(evaluate(and_circuit, bits({0, 0})).index() == 0);

    BooleanCircuit not_circuit(1, {{BoolGateKind::not_gate, 0, 0}}, {1});
    CHECK(evaluate(not_circuit, bits({0})).index() == 1);
    CHECK(evaluate(not_circuit, bits({1})).index() == 0);

    // NAND composition
    BooleanCircuit nand(2,
                        {{BoolGateKind::and_gate, 0, 1},
                         {BoolGateKind::not_gate, 2, 0}},
                        {3});
    CHECK(evaluate(nand, bits({1, 1})).index() == 0);
    CHECK(evaluate(nand, bits({0, 1})).index() == 1);
}

TEST_CASE("evaluate is deterministic and rejects bad lengths") {
    BooleanCircuit c(2, {{BoolGateKind::and_gate, 0, 1}}, {2});
    CHECK(evaluate(c, bits({1, 1})) == evaluate(c, bits({1, 1})));
    CHECK_THROWS_AS(evaluate(c, bits({1, 1, 0})), ValidationError);
}

TEST_CASE("circuits must reference defined wires") {
    CHECK_THROWS_AS(BooleanCircuit(1, {{BoolGateKind::and_gate, 0, 1}}, {1}),
                    ValidationError);
    CHECK_THROWS_AS(BooleanCircuit(1, {}, {5}), ValidationError);
}

TEST_CASE("output distribution on elementary cases") {
    BooleanCircuit and_circuit(2, {{BoolGateKind::and_gate, 0, 1}}, {2});
    auto p = output_distribution(and_circuit, BitSource::bernoulli(2, 0.5));
    CHECK(p[1] == doctest::Approx(0.25));
    CHECK(p[0] == doctest::Approx(0.75));

    BooleanCircuit identity(1, {}, {0});
    auto q = output_distribution(identity, BitSource::bernoulli(1, 0.3));
    CHECK(q[1] == doctest::Approx(0.3));
    CHECK(q[0] == doctest::Approx(0.7));
}

TEST_CASE("output distribution matches the truth-table oracle exactly") {
    Rng rng(51, RngStream::sample, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const int inputs = 1 + static_cast<int>(rng.next_below(10));
        const int gate_count = 1 + static_cast<int>(rng.next_below(25));
        const int outs = 1 + static_cast<int>(rng.next_below(4));
        auto c = random_circuit(inputs, gate_count, outs, rng);

        BitSource src(inputs);
        for (int w = 0; w < inputs; ++w) {
            switch (rng.next_below(3)) {
            case 0:
                src.set_fixed(w, static_cast<int>(rng.next_below(2)));
                break;
            default:
                src.set_bernoulli(w, rng.next_double());
            }
        }

        std::vector<double> expected(size_t{1} << outs, 0.0);
        for (uint32_t input = 0; input < (1u << inputs); ++input) {
            double w = 1.0;
            for (int i = 0; i < inputs; ++i) {
                const double p1 = src.prob_one(i);
                w *= ((input >> i) & 1u) ? p1 : 1.0 - p1;
            }
            expected[oracle_outputs(c, input)] += w;
        }

        auto p = output_distribution(c, src);
        for (size_t x = 0; x < expected.size(); ++x) {
            CHECK(p[x] == doctest::Approx(expected[x]).epsilon(1e-12));
        }
    }
}

TEST_CASE("output distribution refuses oversized enumeration") {
    Rng rng(52, RngStream::sample, 0);
    auto c = random_circuit(21, 4, 1, rng);
    CHECK_THROWS_WITH_AS(output_distribution(c, BitSource::bernoulli(21, 0.5)),
                         doctest::Contains("sample_outputs"),
                         ValidationError);
}

TEST_CASE("sampling the outputs: determinism and agreement with enumeration") {
    Rng rng(53, RngStream::sample, 0);
    auto c = random_circuit(6, 12, 3, rng);
    auto src = BitSource::bernoulli(6, 0.35);

    auto s1 = sample_outputs(c, src, 20000, 9);
    auto s2 = sample_outputs(c, src, 20000, 9);
    CHECK(s1.raw() == s2.raw());

    // fixed inputs collapse to a single outcome
    BitSource fixed(6);
    for (int w = 0; w < 6; ++w) {
        fixed.set_fixed(w, w % 2);
    }
    auto sf = sample_outputs(c, fixed, 50, 1);
    for (size_t i = 1; i < sf.size(); ++i) {
        CHECK(sf.index_at(i) == sf.index_at(0));
    }

    auto exact = output_distribution(c, src);
    auto big = sample_outputs(c, src, 1000000, 77);
    CHECK(tv_distance(empirical_distribution(big), exact) < 0.01);
}

TEST_CASE("sampling stays within the concentration envelope across seeds") {
    Rng rng(54, RngStream::sample, 0);
    auto c = random_circuit(5, 10, 3, rng);
    auto src = BitSource::bernoulli(5, 0.6);
    auto exact = output_distribution(c, src);
    const size_t count = 4000;
    const double bound = 5.0 * std::sqrt(8.0 / static_cast<double>(count));
    int within = 0;
    const int seeds = 100;
    for (int seed = 0; seed < seeds; ++seed) {
        auto s = sample_outputs(c, src, count, static_cast<uint64_t>(seed));
        if (tv_distance(empirical_distribution(s), exact) < bound) {
            ++within;
        }
    }
    CHECK(within >= 99); // >= 0.99 of seeds
}

TEST_CASE("universality: every 3-input function from NOT/AND") {
    // DNF realization: OR over minterms of AND over (possibly negated) inputs
    for (uint32_t truth = 0; truth < 256; ++truth) {
        std::vector<BoolGate> gates;
        std::vector<int> minterms;
        for (uint32_t m = 0; m < 8; ++m) {
            if (!((truth >> m) & 1u)) {
                continue;
            }
            int acc = -1;
            for (int i = 0; i < 3; ++i) {
                int lit = i;
                if (!((m >> i) & 1u)) {
                    gates.push_back({BoolGateKind::not_gate, i, 0});
                    lit = 3 + static_cast<int>(gates.size()) - 1;
                }
                if (acc < 0) {
                    acc = lit;
                } else {
                    gates.push_back({BoolGateKind::and_gate, acc, lit});
                    acc = 3 + static_cast<int>(gates.size()) - 1;
                }
            }
            minterms.push_back(acc);
        }
        int out;
        if (minterms.empty()) {
            // constant false: x AND NOT x
            gates.push_back({BoolGateKind::not_gate, 0, 0});
            gates.push_back({BoolGateKind::and_gate, 0, 3});
            out = 4;
        } else {
            out = minterms[0];
            for (size_t k = 1; k < minterms.size(); ++k) {
                out = build_or(gates, 3, out, minterms[static_cast<size_t>(k)]);
            }
        }
        BooleanCircuit c(3, gates, {out});
        for (uint32_t input = 0; input < 8; ++input) {
            const int expected = (truth >> input) & 1u;
            CHECK(evaluate(c, BitString(3, input)).index() ==
                  static_cast<uint32_t>(expected));
        }
    }
}
