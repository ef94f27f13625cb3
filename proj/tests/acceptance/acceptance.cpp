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

// End-to-end acceptance runner. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Criteria can be
// selected by number on the command line (default: all).

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nisqlab/board.hpp"
#include "nisqlab/boolsim.hpp"
#include "nisqlab/chaostats.hpp"
#include "nisqlab/density.hpp"
#include "nisqlab/noise.hpp"
#include "nisqlab/run_config.hpp"
#include "nisqlab/stats.hpp"
#include "nisqlab/statevector.hpp"
#include "nisqlab/trajectory.hpp"
#include "nisqlab/walsh.hpp"

using namespace nisqlab;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

std::vector<double> random_density(int n, Rng &rng) {
    std::vector<double> q(size_t{1} << n);
    double total = 0.0;
    for (double &v : q) {
        v = rng.next_double() + 1e-9;
        total += v;
    }
    const double scale = static_cast<double>(q.size()) / total;
    for (double &v : q) {
        v *= scale;
    }
    return q;
}

OutcomeDistribution random_distribution(int n, Rng &rng) {
    auto q = random_density(n, rng);
    const double inv = 1.0 / static_cast<double>(q.size());
    for (double &v : q) {
        v *= inv;
    }
    return OutcomeDistribution(n, std::move(q));
}

// ---- criterion 1: spectral noise theorem ------------------------------

Check spectral_noise_theorem() {
    Check check;
    Rng rng(101, RngStream::sample, 0);
    for (double eps : {0.01, 0.1, 0.3}) {
        const double rho = 1.0 - 2.0 * eps;
        for (int n = 1; n <= 10; ++n) {
            auto p = random_distribution(n, rng);
            auto before = spectrum_of(p);
            auto after =
                spectrum_of(apply_bitflip_noise(p, DistributionNoise(eps)));
            double worst = 0.0;
            for (size_t s = 0; s < before.coefficients.size(); ++s) {
                const double expected =
                    before[s] * std::pow(rho, std::popcount(s));
                worst = std::max(worst, std::abs(after[s] - expected));
            }
            check.expect(worst < 1e-10,
                         "n=" + std::to_string(n) + " eps=" +
                             std::to_string(eps) + " deviation " +
                             std::to_string(worst));
        }
    }
    return check;
}

// ---- criterion 2: transform correctness --------------------------------

Check transform_correctness() {
    Check check;
    Rng rng(102, RngStream::sample, 0);

    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(8));
        auto q = random_density(n, rng);
        auto fast = fwht(q);
        const size_t len = q.size();
        double worst = 0.0;
        for (size_t s = 0; s < len; ++s) {
            double slow = 0.0;
            for (size_t x = 0; x < len; ++x) {
                slow += (std::popcount(s & x) % 2 ? -1.0 : 1.0) * q[x];
            }
            slow /= static_cast<double>(len);
            worst = std::max(worst, std::abs(fast[s] - slow));
        }
        check.expect(worst <= 1e-12,
                     "naive mismatch " + std::to_string(worst));
    }

    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(12));
        auto p = random_distribution(n, rng);
        auto spec = spectrum_of(p);
        double direct = 0.0;
        const double dim = std::ldexp(1.0, n);
        for (size_t x = 0; x < p.size(); ++x) {
            const double qx = dim * p[x];
            direct += qx * qx;
        }
        direct /= dim;
        check.expect(std::abs(spec.parseval_mass() - direct) < 1e-9,
                     "parseval violated at n=" + std::to_string(n));
    }
    return check;
}

// ---- criterion 3: Fourier-weight decay of a noisy 12-qubit circuit -----

Check decay_of_noisy_circuit() {
    Check check;
    auto circuit = generate_random_circuit(3, 4, 12, 7);
    const GateNoise noise{0.01, 0.01, 0.0};
    auto samples =
        sample_trajectories(circuit, noise, std::nullopt, 1000000, 42);

    auto estimate =
        estimate_degree_profile(samples, 8, ProfileEstimator::cross_split);
    auto ideal_profile = exact_degree_profile(ideal_distribution(circuit));
    auto fit = decay_fit(estimate, ideal_profile, 1, 8);

    check.expect(fit.degrees.size() >= 6,
                 "only " + std::to_string(fit.degrees.size()) +
                     " usable degrees");
    check.expect(fit.r_squared >= 0.9,
                 "r^2 = " + std::to_string(fit.r_squared));
    check.expect(fit.effective_rho > 0.0 && fit.effective_rho < 1.0,
                 "effective rho = " + std::to_string(fit.effective_rho));

    // monotone nonincreasing up to estimation error (3 sigma per step,
    // with log-ratio errors from the delta method)
    for (size_t i = 0; i + 1 < fit.degrees.size(); ++i) {
        const int d0 = fit.degrees[i];
        const int d1 = fit.degrees[i + 1];
        const double se0 = estimate.std_err[d0] / estimate.weight[d0];
        const double se1 = estimate.std_err[d1] / estimate.weight[d1];
        const double slack = 3.0 * (se0 + se1);
        check.expect(fit.log_ratios[i + 1] <= fit.log_ratios[i] + slack,
                     "log ratio rises from degree " + std::to_string(d0) +
                         " to " + std::to_string(d1));
    }

    std::printf("    [3] effective rho %.4f, r^2 %.4f, degrees used %zu\n",
                fit.effective_rho, fit.r_squared, fit.degrees.size());
    return check;
}

// ---- criterion 4: stationarity p-values are uniform under constant noise

Check stationarity_calibration() {
    Check check;
    auto circuit = generate_random_circuit(2, 2, 8, 11);
    const GateNoise noise{0.0, 0.0, 0.0};
    const auto schedule =
        NoiseSchedule::constant(0.05, ScheduleTarget::gate_rates);
    std::vector<double> pvalues;
    for (int trial = 0; trial < 200; ++trial) {
        auto s = sample_trajectories(circuit, noise, schedule, 2000,
                                     9000 + static_cast<uint64_t>(trial));
        auto report = stationarity_test(s, 199, Metric::l2,
                                        static_cast<uint64_t>(trial));
        pvalues.push_back(report.p_value);
    }
    const double d = ks_uniform_statistic(pvalues);
    const double crit = ks_critical_value(pvalues.size(), 0.01);
    check.expect(d < crit, "KS statistic " + std::to_string(d) +
                               " exceeds critical value " +
                               std::to_string(crit));
    std::printf("    [4] KS statistic %.4f (critical %.4f at level 0.01)\n",
                d, crit);
    return check;
}

// ---- criterion 5: drifting noise is detected ----------------------------

Check stationarity_power() {
    Check check;
    auto circuit = generate_random_circuit(3, 4, 14, 7);
    auto ideal = ideal_distribution(circuit);
    const auto drift =
        NoiseSchedule::linear(0.01, 0.05, ScheduleTarget::bitflip_eps);
    int rejections = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        auto s = draw_iid(ideal, 100000, 5000 + static_cast<uint64_t>(t),
                          "ideal");
        auto noisy = corrupt_samples(s, drift, 6000 + static_cast<uint64_t>(t));
        auto report = stationarity_test(noisy, 999, Metric::l2,
                                        7000 + static_cast<uint64_t>(t));
        if (report.p_value < 0.01) {
            ++rejections;
        }
    }
    check.expect(rejections >= 95, "only " + std::to_string(rejections) +
                                       "/100 trials rejected");
    std::printf("    [5] p < 0.01 in %d/100 trials\n", rejections);
    return check;
}

// ---- criterion 6: backend cross-validation ------------------------------

Check backend_cross_validation() {
    Check check;
    auto circuit = generate_random_circuit(1, 3, 10, 13);
    const GateNoise noise{0.05, 0.05, 0.0};
    auto exact = run_density_matrix(circuit, noise);
    auto traj = sample_trajectories(circuit, noise, std::nullopt, 100000, 8);
    const double tv = tv_distance(empirical_distribution(traj), exact);
    check.expect(tv < 0.01, "TV " + std::to_string(tv));

    auto zero_noise = run_density_matrix(circuit, GateNoise{});
    auto pure = ideal_distribution(circuit);
    double worst = 0.0;
    for (size_t x = 0; x < pure.size(); ++x) {
        worst = std::max(worst, std::abs(zero_noise[x] - pure[x]));
    }
    check.expect(worst < 1e-9,
                 "zero-noise deviation " + std::to_string(worst));
    std::printf("    [6] trajectory-vs-density TV %.5f, zero-noise max "
                "deviation %.2e\n",
                tv, worst);
    return check;
}

// ---- criterion 7: measurement rule --------------------------------------

Check measurement_rule() {
    Check check;
    Mat2 u;
    u(0, 0) = 0.6;
    u(0, 1) = c64{0.0, 0.8};
    u(1, 0) = c64{0.0, 0.8};
    u(1, 1) = 0.6;
    QuantumCircuit circuit(1, 1, {SingleQubitLayer{{{0, u, ""}}}});
    auto state = run_statevector(circuit);
    check.expect(std::abs(state.amplitudes()[0] - c64{0.6, 0.0}) < 1e-15,
                 "amplitude 0 wrong");
    check.expect(std::abs(state.amplitudes()[1] - c64{0.0, 0.8}) < 1e-15,
                 "amplitude 1 wrong");
    auto p = ideal_distribution(circuit);
    check.expect(std::abs(p[0] - 0.36) < 1e-15,
                 "p(0) = " + std::to_string(p[0]));
    check.expect(std::abs(p[1] - 0.64) < 1e-15,
                 "p(1) = " + std::to_string(p[1]));
    return check;
}

// ---- criterion 8: parity board demo -------------------------------------

Check board_demo() {
    Check check;

    auto board_from_mask = [](int rows, int cols, uint32_t mask) {
        Board b(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                b.set(r, c,
                      (mask >> (r * cols + c)) & 1 ? CellColor::red
                                                   : CellColor::blue);
            }
        }
        return b;
    };
    auto enumerate_valid = [&](int rows, int cols) {
        std::vector<Board> out;
        for (uint32_t mask = 0; mask < (1u << (rows * cols)); ++mask) {
            Board b = board_from_mask(rows, cols, mask);
            if (validate(b)) {
                out.push_back(std::move(b));
            }
        }
        return out;
    };

    // unique valid completion for every 3x3 seed
    auto valid33 = enumerate_valid(3, 3);
    check.expect(valid33.size() == 32, "3x3 brute force count " +
                                           std::to_string(valid33.size()));
    for (uint32_t seed_bits = 0; seed_bits < 32; ++seed_bits) {
        std::vector<CellColor> bottom, left;
        for (int c = 0; c < 3; ++c) {
            bottom.push_back((seed_bits >> c) & 1 ? CellColor::red
                                                  : CellColor::blue);
        }
        left.push_back(bottom[0]);
        left.push_back((seed_bits >> 3) & 1 ? CellColor::red
                                            : CellColor::blue);
        left.push_back((seed_bits >> 4) & 1 ? CellColor::red
                                            : CellColor::blue);
        Board completed = complete_from_seed(bottom, left);
        check.expect(validate(completed), "completion is invalid");
        int matches = 0;
        for (const Board &b : valid33) {
            bool same = true;
            for (int c = 0; c < 3; ++c) {
                same &= b.at(0, c) == bottom[static_cast<size_t>(c)];
            }
            for (int r = 0; r < 3; ++r) {
                same &= b.at(r, 0) == left[static_cast<size_t>(r)];
            }
            if (same) {
                ++matches;
                check.expect(b == completed, "completion disagrees with "
                                             "the enumerated board");
            }
        }
        check.expect(matches == 1,
                     "seed has " + std::to_string(matches) + " completions");
    }

    check.expect(enumerate_valid(2, 2).size() == 8 && count_valid(2, 2) == 8,
                 "2x2 count mismatch");
    check.expect(count_valid(3, 3) == 32, "3x3 closed form mismatch");

    // reconstruction round-trips on every valid 3x3 and 3x4 board
    for (auto [rows, cols] : {std::pair{3, 3}, std::pair{3, 4}}) {
        for (const Board &b : enumerate_valid(rows, cols)) {
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cols; ++c) {
                    std::vector<CellColor> row_values, col_values;
                    for (int cc = 0; cc < cols; ++cc) {
                        row_values.push_back(b.at(r, cc));
                    }
                    for (int rr = 0; rr < rows; ++rr) {
                        col_values.push_back(b.at(rr, c));
                    }
                    check.expect(reconstruct_from(r, row_values, c,
                                                  col_values) == b,
                                 "reconstruction failed");
                }
            }
        }
    }
    return check;
}

// ---- criterion 9: Boolean baseline ---------------------------------------

Check boolean_baseline() {
    Check check;

    // gate semantics
    BooleanCircuit and_circuit(2, {{BoolGateKind::and_gate, 0, 1}}, {2});
    for (uint32_t input = 0; input < 4; ++input) {
        const uint32_t expected = input == 3 ? 1 : 0;
        check.expect(evaluate(and_circuit, BitString(2, input)).index() ==
                         expected,
                     "AND semantics");
    }
    BooleanCircuit not_circuit(1, {{BoolGateKind::not_gate, 0, 0}}, {1});
    check.expect(evaluate(not_circuit, BitString(1, 0)).index() == 1 &&
                     evaluate(not_circuit, BitString(1, 1)).index() == 0,
                 "NOT semantics");

    Rng rng(109, RngStream::sample, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const int inputs = 1 + static_cast<int>(rng.next_below(10));
        const int gate_count = 1 + static_cast<int>(rng.next_below(30));
        std::vector<BoolGate> gate_list;
        int defined = inputs;
        for (int g = 0; g < gate_count; ++g) {
            BoolGate gate;
            if (rng.bernoulli(0.4)) {
                gate.kind = BoolGateKind::not_gate;
                gate.a = static_cast<int>(rng.next_below(defined));
            } else {
                gate.kind = BoolGateKind::and_gate;
                gate.a = static_cast<int>(rng.next_below(defined));
                gate.b = static_cast<int>(rng.next_below(defined));
            }
            gate_list.push_back(gate);
            ++defined;
        }
        const int outs = 1 + static_cast<int>(rng.next_below(3));
        std::vector<int> outputs;
        for (int j = 0; j < outs; ++j) {
            outputs.push_back(static_cast<int>(rng.next_below(defined)));
        }
        BooleanCircuit c(inputs, gate_list, outputs);
        BitSource src(inputs);
        for (int w = 0; w < inputs; ++w) {
            src.set_bernoulli(w, rng.next_double());
        }

        // truth-table oracle, wire by wire
        std::vector<double> expected(size_t{1} << outs, 0.0);
        std::vector<int> wires(static_cast<size_t>(defined));
        for (uint32_t input = 0; input < (1u << inputs); ++input) {
            for (int i = 0; i < inputs; ++i) {
                wires[static_cast<size_t>(i)] =
                    static_cast<int>((input >> i) & 1u);
            }
            for (size_t g = 0; g < gate_list.size(); ++g) {
                const BoolGate &gate = gate_list[g];
                wires[static_cast<size_t>(inputs) + g] =
                    gate.kind == BoolGateKind::not_gate
                        ? 1 - wires[static_cast<size_t>(gate.a)]
                        : (wires[static_cast<size_t>(gate.a)] &
                           wires[static_cast<size_t>(gate.b)]);
            }
            double w = 1.0;
            for (int i = 0; i < inputs; ++i) {
                const double p1 = src.prob_one(i);
                w *= ((input >> i) & 1u) ? p1 : 1.0 - p1;
            }
            uint32_t out_index = 0;
            for (size_t j = 0; j < outputs.size(); ++j) {
                out_index |= static_cast<uint32_t>(
                                 wires[static_cast<size_t>(outputs[j])])
                             << j;
            }
            expected[out_index] += w;
        }

        auto p = output_distribution(c, src);
        for (size_t x = 0; x < expected.size(); ++x) {
            check.expect(std::abs(p[x] - expected[x]) < 1e-12,
                         "distribution mismatch at trial " +
                             std::to_string(trial));
        }
    }
    return check;
}

// ---- criterion 10: throughput and byte-identical replay ------------------

Check sampling_throughput_and_replay() {
    Check check;
    auto circuit = generate_random_circuit(3, 4, 14, 7);

    const auto t0 = std::chrono::steady_clock::now();
    auto samples = sample_ideal(circuit, 500000, 42);
    const double gen_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    check.expect(gen_seconds < 60.0,
                 "sampling took " + std::to_string(gen_seconds) + " s");
    check.expect(samples.size() == 500000, "sample count wrong");

    const fs::path dir =
        fs::temp_directory_path() / "nisqlab_acceptance_replay";
    fs::create_directories(dir);
    nlohmann::json config = {
        {"circuit",
         {{"generate",
           {{"rows", 3}, {"cols", 4}, {"depth", 14}, {"seed", 7}}}}},
        {"backend", "ideal"},
        {"samples", 500000},
        {"seed", 42},
        {"analysis",
         {{"metric", "l2"},
          {"B", 999},
          {"stationarity_seed", 5},
          {"max_degree", 8},
          {"estimator", "cross-split"}}},
        {"outputs",
         {{"samples", "samples.txt"},
          {"spectrum", "spectrum.csv"},
          {"report", "report.json"}}}};
    auto cfg = run_config_from_json(config, dir);

    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };

    run_pipeline(cfg);
    const std::string samples1 = slurp(dir / "samples.txt");
    const std::string spectrum1 = slurp(dir / "spectrum.csv");
    const std::string report1 = slurp(dir / "report.json");
    run_pipeline(cfg);
    check.expect(slurp(dir / "samples.txt") == samples1,
                 "sample file not byte-identical");
    check.expect(slurp(dir / "spectrum.csv") == spectrum1,
                 "spectrum CSV not byte-identical");
    check.expect(slurp(dir / "report.json") == report1,
                 "report not byte-identical");
    fs::remove_all(dir);

    std::printf("    [10] 5e5 ideal samples in %.2f s\n", gen_seconds);
    return check;
}

struct Criterion {
    int number;
    const char *label;
    double budget_seconds; // 0 = no stated budget
    std::function<Check()> run;
};

} // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria = {
        {1, "spectral noise theorem (coefficients scale by rho^|S|)", 10.0,
         spectral_noise_theorem},
        {2, "transform correctness (naive oracle + Parseval)", 30.0,
         transform_correctness},
        {3, "degree-weight decay of a noisy 12-qubit circuit", 900.0,
         decay_of_noisy_circuit},
        {4, "stationarity p-value calibration under constant noise", 600.0,
         stationarity_calibration},
        {5, "stationarity power under drifting noise", 600.0,
         stationarity_power},
        {6, "density-matrix vs trajectory backends", 0.0,
         backend_cross_validation},
        {7, "single-qubit measurement rule", 0.0, measurement_rule},
        {8, "parity board: completion, counting, reconstruction", 5.0,
         board_demo},
        {9, "Boolean baseline vs truth-table enumeration", 0.0,
         boolean_baseline},
        {10, "sampling throughput and byte-identical replay", 0.0,
         sampling_throughput_and_replay},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }

    int failures = 0;
    for (const Criterion &criterion : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.number) ==
                selected.end()) {
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Check check;
        try {
            check = criterion.run();
        } catch (const std::exception &e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        if (criterion.budget_seconds > 0.0 &&
            seconds > criterion.budget_seconds) {
            check.ok = false;
            check.detail += (check.detail.empty() ? "" : "; ");
            check.detail += "runtime " + std::to_string(seconds) +
                            " s exceeds budget " +
                            std::to_string(criterion.budget_seconds) + " s";
        }
        std::printf("%s  criterion %2d: %s (%.2f s)%s%s\n",
                    check.ok ? "PASS" : "FAIL", criterion.number,
                    criterion.label, seconds, check.detail.empty() ? "" : " - ",
                    check.detail.c_str());
        std::fflush(stdout);
        failures += check.ok ? 0 : 1;
    }
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
