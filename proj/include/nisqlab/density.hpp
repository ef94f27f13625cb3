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

#include <vector>

#include "nisqlab/circuit.hpp"
#include "nisqlab/distribution.hpp"
#include "nisqlab/noise.hpp"

namespace nisqlab {

inline constexpr int kMaxDensityBits = 10;

/// Dense 2^n x 2^n density operator, stored flattened as rho[r * 2^n + c].
/// Gates act as U rho U+: the unitary on the row bits (positions n..2n-1 of
/// the flattened index) and its conjugate on the column bits, which lets the
/// state-vector kernels do all the work.
class DensityMatrix {
  public:
    explicit DensityMatrix(int n); // |0...0><0...0|

    int n() const { return n_; }
    size_t dim() const { return size_t{1} << n_; }
    const std::vector<c64> &data() const { return rho_; }
    c64 at(size_t r, size_t c) const { return rho_[(r << n_) | c]; }

    void apply(const SingleQubitGate &g);
    void apply(const TwoQubitGate &g);
    void apply_layer(const Layer &layer);

    /// Symmetric depolarizing channel on one qubit: with probability rate
    /// the qubit is replaced by the maximally mixed state.
    void depolarize(int q, double rate);

    double trace_real() const;
    double hermiticity_defect() const;
    std::vector<double> diagonal() const;

  private:
    int n_;
    std::vector<c64> rho_;
};

/// Noisy simulation: every layer is followed by depolarizing channels on the
/// participating qubits (r1 after single-qubit layers, r2 after two-qubit
/// layers), and the diagonal is convolved with per-bit readout flips at the
/// end. Trace and hermiticity are checked after every layer. n is capped at
/// 10; larger circuits go through sample_trajectories.
OutcomeDistribution run_density_matrix(const QuantumCircuit &circuit,
                                       const GateNoise &noise);

/// Per-bit binary symmetric channel on a distribution's outcome bits,
/// applied directly (the spectral route lives in apply_bitflip_noise; the
/// two are compared in tests).
std::vector<double> convolve_readout_flips(std::vector<double> p, double eps);

} // namespace nisqlab
