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

#include "nisqlab/circuit.hpp"

#include <cstdlib>

#include "nisqlab/rng.hpp"

namespace nisqlab {

QuantumCircuit::QuantumCircuit(int rows, int cols, std::vector<Layer> layers)
    : rows_(rows), cols_(cols), layers_(std::move(layers)) {
    require(rows_ >= 1 && cols_ >= 1, "grid dimensions must be positive");
    require(n() <= kMaxBits,
            "grid holds " + std::to_string(n()) + " qubits; the cap is " +
                std::to_string(kMaxBits));
    std::vector<char> used(static_cast<size_t>(n()));
    auto claim = [&](int q) {
        require(q >= 0 && q < n(), "gate qubit out of range");
        require(!used[static_cast<size_t>(q)],
                "layer uses qubit " + std::to_string(q) + " twice");
        used[static_cast<size_t>(q)] = 1;
    };
    for (const Layer &layer : layers_) {
        std::fill(used.begin(), used.end(), 0);
        if (const auto *sl = std::get_if<SingleQubitLayer>(&layer)) {
            for (const SingleQubitGate &g : sl->gates) {
                claim(g.q);
                require(unitarity_defect(g.u) < kUnitaryTol,
                        "non-unitary single-qubit gate");
            }
        } else {
            const auto &tl = std::get<TwoQubitLayer>(layer);
            for (const TwoQubitGate &g : tl.gates) {
                claim(g.a);
                claim(g.b);
                int ra = g.a / cols_, ca = g.a % cols_;
                int rb = g.b / cols_, cb = g.b % cols_;
                require(std::abs(ra - rb) + std::abs(ca - cb) == 1,
                        "pair (" + std::to_string(g.a) + ", " +
                            std::to_string(g.b) + ") is not grid-adjacent");
                require(unitarity_defect(g.u) < kUnitaryTol,
                        "non-unitary two-qubit gate");
            }
        }
    }
}

GatesetConfig GatesetConfig::standard() {
    GatesetConfig cfg;
    cfg.single_pool = {{0, gates::sqrt_x(), "sx"},
                       {0, gates::sqrt_y(), "sy"},
                       {0, gates::sqrt_w(), "sw"}};
    cfg.two_gate = {0, 0, gates::cz(), "cz"};
    return cfg;
}

std::string GatesetConfig::descriptor() const {
    std::string d;
    for (const auto &g : single_pool) {
        if (!d.empty()) {
            d += ',';
        }
        d += g.name.empty() ? "custom" : g.name;
    }
    d += '+';
    d += two_gate.name.empty() ? "custom" : two_gate.name;
    return d;
}

namespace {

// The four staggered coupling patterns of a 2-D grid.
std::vector<std::pair<int, int>> coupling_pairs(int rows, int cols,
                                                int direction) {
    std::vector<std::pair<int, int>> pairs;
    const bool horizontal = direction < 2;
    const int parity = direction % 2;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (horizontal) {
                if (c % 2 == parity && c + 1 < cols) {
                    pairs.emplace_back(r * cols + c, r * cols + c + 1);
                }
            } else {
                if (r % 2 == parity && r + 1 < rows) {
                    pairs.emplace_back(r * cols + c, (r + 1) * cols + c);
                }
            }
        }
    }
    return pairs;
}

} // namespace

QuantumCircuit generate_random_circuit(int rows, int cols, int depth,
                                       const GatesetConfig &gateset,
                                       uint64_t seed) {
    require(rows >= 1 && cols >= 1, "grid dimensions must be positive");
    require(rows * cols <= kMaxBits, "grid exceeds the qubit cap");
    require(depth >= 0, "depth must be nonnegative");
    require(!gateset.single_pool.empty(), "gate pool is empty");
    const int n = rows * cols;
    const size_t pool = gateset.single_pool.size();

    Rng rng(seed, RngStream::circuit, 0);
    std::vector<size_t> last_gate(static_cast<size_t>(n), pool); // pool = none
    std::vector<Layer> layers;
    layers.reserve(static_cast<size_t>(depth));
    int coupling_step = 0;
    for (int layer = 0; layer < depth; ++layer) {
        if (layer % 2 == 0) {
            SingleQubitLayer sl;
            sl.gates.reserve(static_cast<size_t>(n));
            for (int q = 0; q < n; ++q) {
                size_t pick;
                if (pool == 1) {
                    pick = 0;
                } else if (gateset.forbid_repeat &&
                           last_gate[static_cast<size_t>(q)] < pool) {
                    // draw from the pool minus the previous gate
                    pick = rng.next_below(pool - 1);
                    if (pick >= last_gate[static_cast<size_t>(q)]) {
                        ++pick;
                    }
                } else {
                    pick = rng.next_below(pool);
                }
                last_gate[static_cast<size_t>(q)] = pick;
                SingleQubitGate g = gateset.single_pool[pick];
                g.q = q;
                sl.gates.push_back(std::move(g));
            }
            layers.emplace_back(std::move(sl));
        } else {
            TwoQubitLayer tl;
            auto pairs = coupling_pairs(rows, cols, coupling_step % 4);
            ++coupling_step;
            for (auto [a, b] : pairs) {
                TwoQubitGate g = gateset.two_gate;
                g.a = a;
                g.b = b;
                tl.gates.push_back(std::move(g));
            }
            layers.emplace_back(std::move(tl));
        }
    }
    return QuantumCircuit(rows, cols, std::move(layers));
}

QuantumCircuit generate_random_circuit(int rows, int cols, int depth,
                                       uint64_t seed) {
    return generate_random_circuit(rows, cols, depth, GatesetConfig::standard(),
                                   seed);
}

bool circuits_equal(const QuantumCircuit &a, const QuantumCircuit &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() ||
        a.depth() != b.depth()) {
        return false;
    }
    for (size_t i = 0; i < a.depth(); ++i) {
        const Layer &la = a.layers()[i];
        const Layer &lb = b.layers()[i];
        if (la.index() != lb.index()) {
            return false;
        }
        if (const auto *sa = std::get_if<SingleQubitLayer>(&la)) {
            const auto &sb = std::get<SingleQubitLayer>(lb);
            if (sa->gates.size() != sb.gates.size()) {
                return false;
            }
            for (size_t k = 0; k < sa->gates.size(); ++k) {
                const auto &ga = sa->gates[k];
                const auto &gb = sb.gates[k];
                if (ga.q != gb.q || ga.name != gb.name || !(ga.u == gb.u)) {
                    return false;
                }
            }
        } else {
            const auto &ta = std::get<TwoQubitLayer>(la);
            const auto &tb = std::get<TwoQubitLayer>(lb);
            if (ta.gates.size() != tb.gates.size()) {
                return false;
            }
            for (size_t k = 0; k < ta.gates.size(); ++k) {
                const auto &ga = ta.gates[k];
                const auto &gb = tb.gates[k];
                if (ga.a != gb.a || ga.b != gb.b || ga.name != gb.name ||
                    !(ga.u == gb.u)) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace nisqlab
