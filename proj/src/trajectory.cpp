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

#include "nisqlab/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "nisqlab/statevector.hpp"

namespace nisqlab {

namespace {

struct PauliEvent {
    int q;
    int pauli; // 1 = X, 2 = Y, 3 = Z
};

// Qubits hit by a depolarizing slot after each layer, in a fixed order.
std::vector<std::vector<int>> layer_participants(const QuantumCircuit &c) {
    std::vector<std::vector<int>> out(c.depth());
    for (size_t l = 0; l < c.depth(); ++l) {
        const Layer &layer = c.layers()[l];
        if (const auto *sl = std::get_if<SingleQubitLayer>(&layer)) {
            for (const auto &g : sl->gates) {
                out[l].push_back(g.q);
            }
        } else {
            for (const auto &g : std::get<TwoQubitLayer>(layer).gates) {
                out[l].push_back(g.a);
                out[l].push_back(g.b);
            }
        }
    }
    return out;
}

uint32_t measure(std::span<const c64> amps, double u) {
    double total = 0.0;
    for (const c64 &a : amps) {
        total += std::norm(a);
    }
    const double target = u * total;
    double acc = 0.0;
    for (size_t x = 0; x < amps.size(); ++x) {
        acc += std::norm(amps[x]);
        if (acc >= target) {
            return static_cast<uint32_t>(x);
        }
    }
    return static_cast<uint32_t>(amps.size() - 1);
}

} // namespace

SampleSet sample_trajectories(const QuantumCircuit &circuit,
                              const GateNoise &noise,
                              const std::optional<NoiseSchedule> &schedule,
                              size_t count, uint64_t seed) {
    noise.validate();
    require(circuit.n() <= kMaxTrajectoryBits,
            "trajectory backend is capped at " +
                std::to_string(kMaxTrajectoryBits) + " qubits");
    require(count >= 1, "sample count must be at least 1");
    if (schedule) {
        require(schedule->target() != ScheduleTarget::bitflip_eps,
                "bitflip-eps schedules drive corrupt_samples, not the "
                "trajectory backend");
    }

    const int n = circuit.n();
    const size_t dim = size_t{1} << n;
    const size_t depth = circuit.depth();
    const auto participants = layer_participants(circuit);

    // Error-free prefixes: prefix[l] is the ideal state after l layers. A
    // trajectory whose first error lands after layer l starts from
    // prefix[l + 1] and only simulates the remaining layers.
    std::vector<std::vector<c64>> prefix(depth + 1);
    {
        StateVector state(n);
        prefix[0].assign(state.amplitudes().begin(),
                         state.amplitudes().end());
        for (size_t l = 0; l < depth; ++l) {
            state.apply_layer(circuit.layers()[l]);
            prefix[l + 1].assign(state.amplitudes().begin(),
                                 state.amplitudes().end());
        }
    }
    std::vector<double> ideal_cumulative(dim);
    {
        double acc = 0.0;
        for (size_t x = 0; x < dim; ++x) {
            acc += std::norm(prefix[depth][x]);
            ideal_cumulative[x] = acc;
        }
        ideal_cumulative.back() = std::max(ideal_cumulative.back(), 1.0);
    }

    std::vector<uint32_t> samples(count);

#pragma omp parallel
    {
        std::vector<c64> state(dim);
        std::vector<std::vector<PauliEvent>> events(depth);

#pragma omp for schedule(dynamic, 256)
        for (long long s = 0; s < static_cast<long long>(count); ++s) {
            const size_t i = static_cast<size_t>(s);
            Rng rng(seed, RngStream::trajectory, i);

            double r1 = noise.r1;
            double r2 = noise.r2;
            double eps_ro = noise.eps_readout;
            if (schedule) {
                const double v =
                    schedule->value_at(stream_position(i, count));
                switch (schedule->target()) {
                case ScheduleTarget::gate_rates:
                    r1 = v;
                    r2 = v;
                    break;
                case ScheduleTarget::r1:
                    r1 = v;
                    break;
                case ScheduleTarget::r2:
                    r2 = v;
                    break;
                case ScheduleTarget::readout:
                    eps_ro = v;
                    break;
                case ScheduleTarget::bitflip_eps:
                    break; // rejected above
                }
            }

            // Draw the whole error pattern first; the first error decides
            // which ideal prefix the simulation can start from.
            size_t first_error_layer = depth;
            for (size_t l = 0; l < depth; ++l) {
                events[l].clear();
                const bool single =
                    std::holds_alternative<SingleQubitLayer>(
                        circuit.layers()[l]);
                const double rate = single ? r1 : r2;
                if (rate == 0.0) {
                    continue;
                }
                const double p_err = 0.75 * rate;
                for (int q : participants[l]) {
                    if (rng.bernoulli(p_err)) {
                        events[l].push_back(
                            {q, 1 + static_cast<int>(rng.next_below(3))});
                    }
                }
                if (first_error_layer == depth && !events[l].empty()) {
                    first_error_layer = l;
                }
            }

            uint32_t outcome;
            if (first_error_layer == depth) {
                const double u = rng.next_double();
                auto it = std::upper_bound(ideal_cumulative.begin(),
                                           ideal_cumulative.end(), u);
                if (it == ideal_cumulative.end()) {
                    --it;
                }
                outcome =
                    static_cast<uint32_t>(it - ideal_cumulative.begin());
            } else {
                const auto &start = prefix[first_error_layer + 1];
                std::copy(start.begin(), start.end(), state.begin());
                for (const PauliEvent &e : events[first_error_layer]) {
                    kernels::apply_pauli(state, e.q, e.pauli);
                }
                for (size_t l = first_error_layer + 1; l < depth; ++l) {
                    const Layer &layer = circuit.layers()[l];
                    if (const auto *sl =
                            std::get_if<SingleQubitLayer>(&layer)) {
                        for (const auto &g : sl->gates) {
                            kernels::apply_single(state, g.q, g.u);
                        }
                    } else {
                        for (const auto &g :
                             std::get<TwoQubitLayer>(layer).gates) {
                            kernels::apply_two(state, g.a, g.b, g.u);
                        }
                    }
                    for (const PauliEvent &e : events[l]) {
                        kernels::apply_pauli(state, e.q, e.pauli);
                    }
                }
                outcome = measure(state, rng.next_double());
            }

            if (eps_ro > 0.0) {
                for (int j = 0; j < n; ++j) {
                    if (rng.bernoulli(eps_ro)) {
                        outcome ^= (1u << j);
                    }
                }
            }
            samples[i] = outcome;
        }
    }

    SampleSet out(n, "trajectories");
    out.assign(std::move(samples));
    out.set_seed(seed);
    return out;
}

} // namespace nisqlab
