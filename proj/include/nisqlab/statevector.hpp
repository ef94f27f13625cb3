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

#include <span>
#include <vector>

#include "nisqlab/circuit.hpp"
#include "nisqlab/distribution.hpp"

namespace nisqlab {

namespace kernels {

// In-place gate application on a 2^k amplitude array; `pos` addresses the
// bit of the flattened index the gate acts on. The density-matrix backend
// reuses these on its 4^n flattening, which is why they are exposed here.
void apply_single(std::span<c64> amps, int pos, const Mat2 &u);
void apply_two(std::span<c64> amps, int pos_a, int pos_b, const Mat4 &u);
// pauli: 1 = X, 2 = Y, 3 = Z.
void apply_pauli(std::span<c64> amps, int pos, int pauli);

} // namespace kernels

/// Dense amplitude vector of n qubits, starting in |0...0>.
class StateVector {
  public:
    explicit StateVector(int n);

    /// Wraps explicitly given amplitudes; must be unit-norm within 1e-10.
    StateVector(int n, std::vector<c64> amplitudes);

    int n() const { return n_; }
    size_t dim() const { return amps_.size(); }
    std::span<const c64> amplitudes() const { return amps_; }

    void apply(const SingleQubitGate &g);
    void apply(const TwoQubitGate &g);
    void apply_layer(const Layer &layer);
    void apply_pauli(int q, int pauli);

    double norm_sq() const;
    std::vector<double> probabilities() const;

  private:
    int n_;
    std::vector<c64> amps_;
};

/// |0...0> evolved layer by layer; the norm is checked after every layer
/// (within 1e-10) and gates are re-validated for unitarity.
StateVector run_statevector(const QuantumCircuit &circuit);

/// Born-rule distribution p[x] = |amplitude_x|^2 of the final state.
OutcomeDistribution ideal_distribution(const QuantumCircuit &circuit);

/// count i.i.d. measurement outcomes of the ideal final state.
SampleSet sample_ideal(const QuantumCircuit &circuit, size_t count,
                       uint64_t seed);

} // namespace nisqlab
