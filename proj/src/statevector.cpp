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

#include "nisqlab/statevector.hpp"

#include <cmath>

namespace nisqlab {

namespace kernels {

namespace {

// Plain complex product; keeps the hot loops free of the library's
// NaN-propagating __muldc3 path.
inline c64 cmul(const c64 &a, const c64 &b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

} // namespace

void apply_single(std::span<c64> amps, int pos, const Mat2 &u) {
    const size_t bit = size_t{1} << pos;
    const size_t dim = amps.size();
    const c64 u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (size_t base = 0; base < dim; base += 2 * bit) {
        for (size_t i = base; i < base + bit; ++i) {
            const c64 a0 = amps[i];
            const c64 a1 = amps[i | bit];
            amps[i] = cmul(u00, a0) + cmul(u01, a1);
            amps[i | bit] = cmul(u10, a0) + cmul(u11, a1);
        }
    }
}

void apply_two(std::span<c64> amps, int pos_a, int pos_b, const Mat4 &u) {
    const size_t bit_a = size_t{1} << pos_a;
    const size_t bit_b = size_t{1} << pos_b;
    const size_t dim = amps.size();

    if (u.is_diagonal()) {
        const c64 d[4] = {u(0, 0), u(1, 1), u(2, 2), u(3, 3)};
        for (size_t i = 0; i < dim; ++i) {
            const int local = 2 * ((i & bit_a) != 0) + ((i & bit_b) != 0);
            amps[i] = cmul(amps[i], d[local]);
        }
        return;
    }

    // Enumerate indices with both gate bits clear by inserting two zero bits
    // into a compact counter.
    const int lo = pos_a < pos_b ? pos_a : pos_b;
    const int hi = pos_a < pos_b ? pos_b : pos_a;
    const size_t mask_lo = (size_t{1} << lo) - 1;
    const size_t mask_mid = ((size_t{1} << (hi - 1)) - 1) & ~mask_lo;
    const size_t mask_hi = ~(mask_lo | mask_mid);
    for (size_t k = 0; k < dim >> 2; ++k) {
        const size_t i00 =
            (k & mask_lo) | ((k & mask_mid) << 1) | ((k & mask_hi) << 2);
        const size_t i01 = i00 | bit_b;
        const size_t i10 = i00 | bit_a;
        const size_t i11 = i10 | bit_b;
        const c64 v0 = amps[i00], v1 = amps[i01], v2 = amps[i10],
                  v3 = amps[i11];
        amps[i00] = cmul(u(0, 0), v0) + cmul(u(0, 1), v1) + cmul(u(0, 2), v2) +
                    cmul(u(0, 3), v3);
        amps[i01] = cmul(u(1, 0), v0) + cmul(u(1, 1), v1) + cmul(u(1, 2), v2) +
                    cmul(u(1, 3), v3);
        amps[i10] = cmul(u(2, 0), v0) + cmul(u(2, 1), v1) + cmul(u(2, 2), v2) +
                    cmul(u(2, 3), v3);
        amps[i11] = cmul(u(3, 0), v0) + cmul(u(3, 1), v1) + cmul(u(3, 2), v2) +
                    cmul(u(3, 3), v3);
    }
}

void apply_pauli(std::span<c64> amps, int pos, int pauli) {
    const size_t bit = size_t{1} << pos;
    const size_t dim = amps.size();
    switch (pauli) {
    case 1: // X
        for (size_t base = 0; base < dim; base += 2 * bit) {
            for (size_t i = base; i < base + bit; ++i) {
                std::swap(amps[i], amps[i | bit]);
            }
        }
        break;
    case 2: // Y: |0> -> i|1>, |1> -> -i|0>
        for (size_t base = 0; base < dim; base += 2 * bit) {
            for (size_t i = base; i < base + bit; ++i) {
                const c64 a0 = amps[i];
                const c64 a1 = amps[i | bit];
                amps[i] = c64{a1.imag(), -a1.real()};      // -i * a1
                amps[i | bit] = c64{-a0.imag(), a0.real()}; // i * a0
            }
        }
        break;
    case 3: // Z
        for (size_t i = 0; i < dim; ++i) {
            if (i & bit) {
                amps[i] = -amps[i];
            }
        }
        break;
    default:
        throw ValidationError("pauli code must be 1 (X), 2 (Y) or 3 (Z)");
    }
}

} // namespace kernels

StateVector::StateVector(int n) : n_(n), amps_(size_t{1} << n, c64{}) {
    check_bit_count(n);
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<c64> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    check_bit_count(n);
    require(amps_.size() == (size_t{1} << n),
            "amplitude vector must have 2^n entries");
    double norm = 0.0;
    for (const c64 &a : amps_) {
        norm += std::norm(a);
    }
    require(std::abs(norm - 1.0) < 1e-10, "state vector must have unit norm");
}

void StateVector::apply(const SingleQubitGate &g) {
    require(g.q >= 0 && g.q < n_, "gate qubit out of range");
    require(unitarity_defect(g.u) < kUnitaryTol, "non-unitary gate");
    kernels::apply_single(amps_, g.q, g.u);
}

void StateVector::apply(const TwoQubitGate &g) {
    require(g.a >= 0 && g.a < n_ && g.b >= 0 && g.b < n_ && g.a != g.b,
            "gate qubits out of range");
    require(unitarity_defect(g.u) < kUnitaryTol, "non-unitary gate");
    kernels::apply_two(amps_, g.a, g.b, g.u);
}

void StateVector::apply_layer(const Layer &layer) {
    if (const auto *sl = std::get_if<SingleQubitLayer>(&layer)) {
        for (const SingleQubitGate &g : sl->gates) {
            apply(g);
        }
    } else {
        for (const TwoQubitGate &g : std::get<TwoQubitLayer>(layer).gates) {
            apply(g);
        }
    }
}

void StateVector::apply_pauli(int q, int pauli) {
    require(q >= 0 && q < n_, "pauli qubit out of range");
    kernels::apply_pauli(amps_, q, pauli);
}

double StateVector::norm_sq() const {
    double norm = 0.0;
    for (const c64 &a : amps_) {
        norm += std::norm(a);
    }
    return norm;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (size_t x = 0; x < amps_.size(); ++x) {
        p[x] = std::norm(amps_[x]);
    }
    return p;
}

StateVector run_statevector(const QuantumCircuit &circuit) {
    StateVector state(circuit.n());
    for (const Layer &layer : circuit.layers()) {
        state.apply_layer(layer);
        require(std::abs(state.norm_sq() - 1.0) < 1e-10,
                "norm drifted past tolerance after a layer");
    }
    return state;
}

OutcomeDistribution ideal_distribution(const QuantumCircuit &circuit) {
    StateVector state = run_statevector(circuit);
    return OutcomeDistribution(circuit.n(), state.probabilities());
}

SampleSet sample_ideal(const QuantumCircuit &circuit, size_t count,
                       uint64_t seed) {
    require(count >= 1, "sample count must be at least 1");
    SampleSet out =
        draw_iid(ideal_distribution(circuit), count, seed, "ideal");
    return out;
}

} // namespace nisqlab
