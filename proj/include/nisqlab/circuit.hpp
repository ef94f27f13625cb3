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
#include <variant>
#include <vector>

#include "nisqlab/bitstring.hpp"
#include "nisqlab/gates.hpp"

namespace nisqlab {

/// Named gates round-trip through circuit files by name; gates constructed
/// from raw matrices carry an empty name and serialize as matrices.
struct SingleQubitGate {
    int q = 0;
    Mat2 u;
    std::string name;
};

struct TwoQubitGate {
    int a = 0; // high-order bit of the 4x4 basis
    int b = 0;
    Mat4 u;
    std::string name;
};

/// One round of the computation: gates applied in parallel, so targets
/// within a layer must be disjoint (and grid-adjacent for pairs).
struct SingleQubitLayer {
    std::vector<SingleQubitGate> gates;
};

struct TwoQubitLayer {
    std::vector<TwoQubitGate> gates;
};

using Layer = std::variant<SingleQubitLayer, TwoQubitLayer>;

/// Layered gate program on a rows x cols qubit grid. Qubit (r, c) has index
/// r*cols + c. Construction validates unitarity (within 1e-12), qubit
/// ranges, in-layer disjointness, and grid adjacency of pairs.
class QuantumCircuit {
  public:
    QuantumCircuit(int rows, int cols, std::vector<Layer> layers);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int n() const { return rows_ * cols_; }
    size_t depth() const { return layers_.size(); }
    const std::vector<Layer> &layers() const { return layers_; }

    int qubit_index(int r, int c) const { return r * cols_ + c; }

  private:
    int rows_;
    int cols_;
    std::vector<Layer> layers_;
};

/// Gate pool for random circuit generation. Defaults follow the usual
/// superconducting-grid convention: single-qubit gates uniform over
/// {sqrt(X), sqrt(Y), sqrt(W)} with no immediate repetition per qubit, and
/// CZ on the coupled pairs. Any explicit unitaries may be substituted.
struct GatesetConfig {
    std::vector<SingleQubitGate> single_pool; // q field ignored
    TwoQubitGate two_gate;                    // a/b fields ignored
    bool forbid_repeat = true;

    static GatesetConfig standard();

    /// Short text descriptor stored in circuit files, e.g. "sx,sy,sw+cz".
    std::string descriptor() const;
};

/// Alternating single- and two-qubit layers, `depth` layers total, starting
/// with a single-qubit layer. Two-qubit layers cycle through the four grid
/// coupling directions (right from even column, right from odd column, up
/// from even row, up from odd row). Deterministic given seed.
QuantumCircuit generate_random_circuit(int rows, int cols, int depth,
                                       const GatesetConfig &gateset,
                                       uint64_t seed);

QuantumCircuit generate_random_circuit(int rows, int cols, int depth,
                                       uint64_t seed);

/// Structural equality (same grid, layers, qubits, names, and matrices).
bool circuits_equal(const QuantumCircuit &a, const QuantumCircuit &b);

} // namespace nisqlab
