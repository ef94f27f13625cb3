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

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "nisqlab/board.hpp"
#include "nisqlab/circuit_io.hpp"
#include "nisqlab/density.hpp"
#include "nisqlab/report_io.hpp"
#include "nisqlab/run_config.hpp"
#include "nisqlab/sample_io.hpp"
#include "nisqlab/statevector.hpp"

namespace {

using namespace nisqlab;

// Compact schedule syntax: constant:V | linear:FROM:TO | sinusoid:M:A:P |
// random-walk:START:STEP:SEED. The target comes in separately.
NoiseSchedule parse_schedule_arg(const std::string &text,
                                 ScheduleTarget target) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) {
        parts.push_back(part);
    }
    require(!parts.empty(), "empty schedule descriptor");
    auto num = [&](size_t i) {
        require(i < parts.size(), "schedule '" + text + "' is missing fields");
        try {
            return std::stod(parts[i]);
        } catch (const std::exception &) {
            throw ValidationError("bad number in schedule '" + text + "'");
        }
    };
    const std::string &kind = parts[0];
    if (kind == "constant") {
        return NoiseSchedule::constant(num(1), target);
    }
    if (kind == "linear") {
        return NoiseSchedule::linear(num(1), num(2), target);
    }
    if (kind == "sinusoid") {
        return NoiseSchedule::sinusoid(num(1), num(2), num(3), target);
    }
    if (kind == "random-walk") {
        require(parts.size() == 4, "random-walk needs start:step:seed");
        return NoiseSchedule::random_walk(
            num(1), num(2), std::stoull(parts[3]), target);
    }
    throw ValidationError("unknown schedule kind '" + kind + "'");
}

std::vector<CellColor> parse_colors(const std::string &text) {
    std::vector<CellColor> out;
    for (char ch : text) {
        require(ch == 'R' || ch == 'B',
                std::string("board colors must be R or B, got '") + ch + "'");
        out.push_back(ch == 'R' ? CellColor::red : CellColor::blue);
    }
    return out;
}

void print_fit(const DecayFit &fit) {
    std::printf("degrees used: ");
    for (size_t i = 0; i < fit.degrees.size(); ++i) {
        std::printf("%s%d", i ? "," : "", fit.degrees[i]);
    }
    std::printf("\nslope         %.6f\nintercept     %.6f\n"
                "r_squared     %.6f\neffective_rho %.6f\n",
                fit.slope, fit.intercept, fit.r_squared, fit.effective_rho);
}

int run(int argc, char **argv) {
    CLI::App app{"NISQ sampling simulator and spectral-analysis toolkit"};
    app.require_subcommand(1);

    // --- gen-circuit ---
    auto *gen = app.add_subcommand(
        "gen-circuit", "Generate a random grid circuit and write it to a file");
    int rows = 3, cols = 4, depth = 14;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--rows", rows, "Grid rows")->required();
    gen->add_option("--cols", cols, "Grid columns")->required();
    gen->add_option("--depth", depth, "Total layer count")->required();
    gen->add_option("--seed", gen_seed, "Generator seed")->required();
    gen->add_option("-o,--out", gen_out, "Output circuit file")->required();
    gen->callback([&] {
        auto c = generate_random_circuit(rows, cols, depth, gen_seed);
        write_circuit(c, gen_out, GatesetConfig::standard().descriptor(),
                      gen_seed);
        std::printf("wrote %s (n=%d, depth=%zu)\n", gen_out.c_str(), c.n(),
                    c.depth());
    });

    // --- simulate ---
    auto *sim = app.add_subcommand(
        "simulate", "Sample a circuit with the chosen backend");
    std::string sim_circuit, sim_backend = "ideal", sim_out;
    std::string sim_schedule, sim_target = "gate-rates";
    GateNoise sim_noise;
    size_t sim_count = 0;
    uint64_t sim_seed = 0;
    sim->add_option("--circuit", sim_circuit, "Circuit file")->required();
    sim->add_option("--backend", sim_backend,
                    "ideal | density | trajectories");
    sim->add_option("--count", sim_count, "Sample count")->required();
    sim->add_option("--seed", sim_seed, "Sampling seed")->required();
    sim->add_option("--r1", sim_noise.r1, "Depolarizing rate, 1q gates");
    sim->add_option("--r2", sim_noise.r2, "Depolarizing rate, 2q gates");
    sim->add_option("--eps-readout", sim_noise.eps_readout,
                    "Readout flip probability");
    sim->add_option("--schedule", sim_schedule,
                    "Drift, e.g. linear:0.01:0.05 (trajectories only)");
    sim->add_option("--schedule-target", sim_target,
                    "gate-rates | r1 | r2 | readout");
    sim->add_option("-o,--out", sim_out, "Output sample file")->required();
    sim->callback([&] {
        auto circuit = parse_circuit(sim_circuit);
        const Backend backend = parse_backend(sim_backend);
        std::optional<NoiseSchedule> schedule;
        if (!sim_schedule.empty()) {
            require(backend == Backend::trajectories,
                    "--schedule only applies to the trajectories backend");
            schedule = parse_schedule_arg(sim_schedule,
                                          parse_schedule_target(sim_target));
        }
        SampleSet samples = [&] {
            switch (backend) {
            case Backend::ideal:
                return sample_ideal(circuit, sim_count, sim_seed);
            case Backend::density:
                return draw_iid(run_density_matrix(circuit, sim_noise),
                                sim_count, sim_seed, "density");
            case Backend::trajectories:
            default:
                return sample_trajectories(circuit, sim_noise, schedule,
                                           sim_count, sim_seed);
            }
        }();
        write_samples(samples, sim_out);
        std::printf("wrote %zu samples to %s\n", samples.size(),
                    sim_out.c_str());
    });

    // --- corrupt ---
    auto *cor = app.add_subcommand(
        "corrupt", "Flip sample bits independently, optionally drifting");
    std::string cor_in, cor_out, cor_schedule;
    double cor_eps = -1.0;
    uint64_t cor_seed = 0;
    cor->add_option("--in", cor_in, "Input sample file")->required();
    cor->add_option("--eps", cor_eps, "Constant flip probability");
    cor->add_option("--schedule", cor_schedule,
                    "Drifting eps, e.g. linear:0.01:0.05");
    cor->add_option("--seed", cor_seed, "Corruption seed")->required();
    cor->add_option("-o,--out", cor_out, "Output sample file")->required();
    cor->callback([&] {
        auto s = parse_samples(cor_in);
        SampleSet out = [&] {
            if (!cor_schedule.empty()) {
                return corrupt_samples(
                    s,
                    parse_schedule_arg(cor_schedule,
                                       ScheduleTarget::bitflip_eps),
                    cor_seed);
            }
            require(cor_eps >= 0.0, "corrupt needs --eps or --schedule");
            return corrupt_samples(s, DistributionNoise(cor_eps), cor_seed);
        }();
        write_samples(out, cor_out);
        std::printf("wrote %zu corrupted samples to %s\n", out.size(),
                    cor_out.c_str());
    });

    // --- ingest ---
    auto *ing = app.add_subcommand(
        "ingest", "Convert a third-party dump via column mapping");
    std::string ing_in, ing_out, ing_columns, ing_delim, ing_source = "ingest";
    size_t ing_skip = 0;
    ing->add_option("--in", ing_in, "Raw input file")->required();
    ing->add_option("--bit-columns", ing_columns,
                    "Comma-separated 0-based field index for each bit, "
                    "e.g. 2,0,1")
        ->required();
    ing->add_option("--delimiter", ing_delim,
                    "Single-character field delimiter (default: whitespace)");
    ing->add_option("--skip-rows", ing_skip, "Header rows to skip");
    ing->add_option("--source", ing_source, "Source label for the header");
    ing->add_option("-o,--out", ing_out, "Output sample file")->required();
    ing->callback([&] {
        std::vector<int> columns;
        std::istringstream cols(ing_columns);
        std::string item;
        while (std::getline(cols, item, ',')) {
            try {
                columns.push_back(std::stoi(item));
            } catch (const std::exception &) {
                throw ValidationError("bad column index '" + item + "'");
            }
        }
        require(ing_delim.size() <= 1, "delimiter must be one character");
        auto s = ingest_columns(ing_in, columns,
                                ing_delim.empty() ? '\0' : ing_delim[0],
                                ing_skip, ing_source);
        write_samples(s, ing_out);
        std::printf("ingested %zu samples (n=%d) into %s\n", s.size(), s.n(),
                    ing_out.c_str());
    });

    // --- spectrum ---
    auto *spec = app.add_subcommand(
        "spectrum", "Estimate degree weights W_d from a sample file");
    std::string spec_in, spec_out, spec_estimator = "cross-split";
    std::string spec_circuit;
    int spec_max_degree = 8;
    spec->add_option("--in", spec_in, "Input sample file")->required();
    spec->add_option("--max-degree", spec_max_degree, "Highest degree");
    spec->add_option("--estimator", spec_estimator,
                     "cross-split | fwht-debiased");
    spec->add_option("--circuit", spec_circuit,
                     "Circuit file; adds a ratio column vs its ideal profile");
    spec->add_option("-o,--out", spec_out, "Output CSV")->required();
    spec->callback([&] {
        auto s = parse_samples(spec_in);
        auto est = estimate_degree_profile(s,
                                           std::min(spec_max_degree, s.n()),
                                           parse_estimator(spec_estimator));
        SpectrumTable table = SpectrumTable::from(est);
        if (!spec_circuit.empty()) {
            auto ideal = ideal_distribution(parse_circuit(spec_circuit));
            table.add_ratio(exact_degree_profile(ideal));
        }
        write_spectrum_csv(table, spec_out);
        std::printf("wrote %s\n", spec_out.c_str());
    });

    // --- stationarity ---
    auto *stat = app.add_subcommand(
        "stationarity",
        "Sequential-half vs random-split permutation test on a stream");
    std::string stat_in, stat_metric = "l2", stat_out;
    int stat_B = 999;
    uint64_t stat_seed = 0;
    stat->add_option("--in", stat_in, "Input sample file")->required();
    stat->add_option("--metric", stat_metric, "l2 | tv");
    stat->add_option("--B", stat_B, "Number of random splits");
    stat->add_option("--seed", stat_seed, "Split seed")->required();
    stat->add_option("-o,--out", stat_out, "Report JSON (optional)");
    stat->callback([&] {
        auto s = parse_samples(stat_in);
        auto report =
            stationarity_test(s, stat_B, parse_metric(stat_metric), stat_seed);
        std::printf("observed %s distance: %.8g\np-value: %.6g  (B=%d)\n",
                    metric_name(report.metric), report.observed_distance,
                    report.p_value, report.B);
        if (!stat_out.empty()) {
            nlohmann::json doc;
            doc["kind"] = "stationarity-report";
            doc["stationarity"] = to_json(report);
            write_report(doc, stat_out);
        }
    });

    // --- decay ---
    auto *dec = app.add_subcommand(
        "decay", "Fit log(W_d_noisy / W_d_ref) against degree");
    std::string dec_noisy, dec_ref, dec_out;
    int dec_lo = 1, dec_hi = 8;
    dec->add_option("--noisy", dec_noisy, "Noisy spectrum CSV")->required();
    dec->add_option("--ref", dec_ref, "Reference spectrum CSV")->required();
    dec->add_option("--d-lo", dec_lo, "Lowest degree");
    dec->add_option("--d-hi", dec_hi, "Highest degree");
    dec->add_option("-o,--out", dec_out, "Fit JSON (optional)");
    dec->callback([&] {
        auto fit = decay_fit(parse_spectrum_csv(dec_noisy),
                             parse_spectrum_csv(dec_ref), dec_lo, dec_hi);
        print_fit(fit);
        if (!dec_out.empty()) {
            nlohmann::json doc;
            doc["kind"] = "decay-fit";
            doc["decay"] = to_json(fit);
            write_report(doc, dec_out);
        }
    });

    // --- xeb ---
    auto *xeb = app.add_subcommand(
        "xeb", "Linear cross-entropy fidelity of samples against a circuit");
    std::string xeb_in, xeb_circuit;
    xeb->add_option("--in", xeb_in, "Input sample file")->required();
    xeb->add_option("--circuit", xeb_circuit, "Circuit file")->required();
    xeb->callback([&] {
        auto s = parse_samples(xeb_in);
        auto ideal = ideal_distribution(parse_circuit(xeb_circuit));
        std::printf("xeb fidelity: %.8g\n", xeb_fidelity(s, ideal));
    });

    // --- board-demo ---
    auto *board = app.add_subcommand(
        "board-demo",
        "Complete a parity board from a seed row/column and print it");
    int b_rows = 7, b_cols = 9;
    uint64_t b_seed = 0;
    bool b_seeded = false, b_trace = false;
    std::string b_bottom, b_left;
    board->add_option("--rows", b_rows, "Board rows");
    board->add_option("--cols", b_cols, "Board columns");
    board->add_option("--seed", b_seed, "Random seed row/column")
        ->each([&](const std::string &) { b_seeded = true; });
    board->add_option("--bottom", b_bottom, "Bottom row, e.g. RBRBR");
    board->add_option("--left", b_left, "Left column, e.g. RBB");
    board->add_flag("--trace", b_trace, "Print the completion stages");
    board->callback([&] {
        std::vector<CellColor> bottom, left;
        if (!b_bottom.empty() || !b_left.empty()) {
            require(!b_bottom.empty() && !b_left.empty(),
                    "--bottom and --left go together");
            bottom = parse_colors(b_bottom);
            left = parse_colors(b_left);
        } else {
            require(b_seeded, "board-demo needs --seed or --bottom/--left");
            Rng rng(b_seed, RngStream::sample, 0);
            for (int c = 0; c < b_cols; ++c) {
                bottom.push_back(rng.bernoulli(0.5) ? CellColor::red
                                                    : CellColor::blue);
            }
            left.push_back(bottom[0]);
            for (int r = 1; r < b_rows; ++r) {
                left.push_back(rng.bernoulli(0.5) ? CellColor::red
                                                  : CellColor::blue);
            }
        }
        Board completed = complete_from_seed(bottom, left);
        std::printf("%s", completed.to_text().c_str());
        std::printf("valid: %s\n", validate(completed) ? "yes" : "no");
        std::printf("free seed cells: %d of %d\n",
                    free_cell_count(completed.rows(), completed.cols()),
                    completed.rows() * completed.cols());
        if (b_trace) {
            std::printf("completion stages (top row first):\n");
            for (int r = completed.rows() - 1; r >= 0; --r) {
                for (int c = 0; c < completed.cols(); ++c) {
                    const int stage =
                        (r == 0 || c == 0) ? 0 : r + c - 1;
                    std::printf("%3d", stage);
                }
                std::printf("\n");
            }
        }
    });

    // --- report ---
    auto *rep = app.add_subcommand(
        "report", "Run a full pipeline from a config file, reproducibly");
    std::string rep_config;
    rep->add_option("--config", rep_config, "Run configuration JSON")
        ->required();
    rep->callback([&] {
        auto config = parse_run_config(rep_config);
        auto report = run_pipeline(config);
        std::printf("config %s\n",
                    report["config_hash"].get<std::string>().c_str());
        std::printf("xeb fidelity: %.8g\n", report["xeb"].get<double>());
        std::printf("stationarity p-value: %.6g\n",
                    report["stationarity"]["p_value"].get<double>());
        if (report["decay"].contains("effective_rho")) {
            std::printf("decay effective rho: %.6g (r^2 %.4g)\n",
                        report["decay"]["effective_rho"].get<double>(),
                        report["decay"]["r_squared"].get<double>());
        }
        if (config.report_path) {
            std::printf("report written to %s\n",
                        config.report_path->string().c_str());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit code 1
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const nisqlab::IoError &e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const nisqlab::ValidationError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
