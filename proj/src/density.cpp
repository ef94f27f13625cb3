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

#include "nisqlab/density.hpp"

#include <cmath>

#include "nisqlab/statevector.hpp"

namespace nisqlab {

DensityMatrix::DensityMatrix(int n)
    : n_(n), rho_(size_t{1} << (2 * n), c64{}) {
    check_bit_count(n);
    require(n <= kMaxDensityBits,
            "density-matrix backend is capped at " +
                std::to_string(kMaxDensityBits) +
                " qubits; use sample_trajectories for larger circuits");
    rho_[0] = 1.0;
}

void DensityMatrix::apply(const SingleQubitGate &g) {
    require(g.q >= 0 && g.q < n_, "gate qubit out of range");
    require(unitarity_defect(g.u) < kUnitaryTol, "non-unitary gate");
    kernels::apply_single(rho_, g.q + n_, g.u);
    kernels::apply_single(rho_, g.q, g.u.conjugate());
}

void DensityMatrix::apply(const TwoQubitGate &g) {
    require(g.a >= 0 && g.a < n_ && g.b >= 0 && g.b < n_ && g.a != g.b,
            "gate qubits out of range");
    require(unitarity_defect(g.u) < kUnitaryTol, "non-unitary gate");
    kernels::apply_two(rho_, g.a + n_, g.b + n_, g.u);
    kernels::apply_two(rho_, g.a, g.b, g.u.conjugate());
}

void DensityMatrix::apply_layer(const Layer &layer) {
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

void DensityMatrix::depolarize(int q, double rate) {
    require(q >= 0 && q < n_, "channel qubit out of range");
    require(rate >= 0.0 && rate <= 1.0, "depolarizing rate must be in [0, 1]");
    if (rate == 0.0) {
        return;
    }
    // Closed form of (1-r) rho + r/4 (rho + X rho X + Y rho Y + Z rho Z):
    // entries whose row/column bits at q agree mix with the partner entry
    // across both flips; entries that disagree shrink by (1-r).
    const size_t col_bit = size_t{1} << q;
    const size_t row_bit = size_t{1} << (q + n_);
    const size_t mask = col_bit | row_bit;
    const size_t dim2 = rho_.size();
    const double keep = 1.0 - rate / 2.0;
    const double swap = rate / 2.0;
    const double shrink = 1.0 - rate;
    for (size_t i = 0; i < dim2; ++i) {
        const bool row_set = (i & row_bit) != 0;
        const bool col_set = (i & col_bit) != 0;
        if (row_set != col_set) {
            rho_[i] *= shrink;
        } else if (!row_set) { // handle each agreeing pair once
            const size_t j = i | mask;
            const c64 vi = rho_[i];
            const c64 vj = rho_[j];
            rho_[i] = keep * vi + swap * vj;
            rho_[j] = swap * vi + keep * vj;
        }
    }
}

double DensityMatrix::trace_real() const {
    double tr = 0.0;
    const size_t dim_ = dim();
    for (size_t r = 0; r < dim_; ++r) {
        tr += rho_[(r << n_) | r].real();
    }
    return tr;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    const size_t dim_ = dim();
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t c = r; c < dim_; ++c) {
            const c64 d = rho_[(r << n_) | c] - std::conj(rho_[(c << n_) | r]);
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

std::vector<double> DensityMatrix::diagonal() const {
    const size_t dim_ = dim();
    std::vector<double> d(dim_);
    for (size_t r = 0; r < dim_; ++r) {
        d[r] = rho_[(r << n_) | r].real();
    }
    return d;
}

std::vector<double> convolve_readout_flips(std::vector<double> p, double eps) {
    if (eps == 0.0) {
        return p;
    }
    const double keep = 1.0 - eps;
    for (size_t bit = 1; bit < p.size(); bit <<= 1) {
        for (size_t base = 0; base < p.size(); base += 2 * bit) {
            for (size_t i = base; i < base + bit; ++i) {
                const double a = p[i];
                const double b = p[i | bit];
                p[i] = keep * a + eps * b;
                p[i | bit] = eps * a + keep * b;
            }
        }
    }
    return p;
}

OutcomeDistribution run_density_matrix(const QuantumCircuit &circuit,
                                       const GateNoise &noise) {
    noise.validate();
    DensityMatrix rho(circuit.n());
    for (const Layer &layer : circuit.layers()) {
        rho.apply_layer(layer);
        if (const auto *sl = std::get_if<SingleQubitLayer>(&layer)) {
            for (const SingleQubitGate &g : sl->gates) {
                rho.depolarize(g.q, noise.r1);
            }
        } else {
            for (const TwoQubitGate &g :
                 std::get<TwoQubitLayer>(layer).gates) {
                rho.depolarize(g.a, noise.r2);
                rho.depolarize(g.b, noise.r2);
            }
        }
        require(std::abs(rho.trace_real() - 1.0) < 1e-10,
                "trace drifted past tolerance after a layer");
        require(rho.hermiticity_defect() < 1e-10,
                "density matrix lost hermiticity");
    }
    std::vector<double> p =
        convolve_readout_flips(rho.diagonal(), noise.eps_readout);
    return OutcomeDistribution(circuit.n(), std::move(p));
}

} // namespace nisqlab
