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

#include "nisqlab/run_config.hpp"

#include <fstream>

#include "nisqlab/circuit_io.hpp"
#include "nisqlab/density.hpp"
#include "nisqlab/report_io.hpp"
#include "nisqlab/sample_io.hpp"
#include "nisqlab/statevector.hpp"

namespace nisqlab {

using nlohmann::json;

Backend parse_backend(const std::string &name) {
    if (name == "ideal") {
        return Backend::ideal;
    }
    if (name == "density") {
        return Backend::density;
    }
    if (name == "trajectories") {
        return Backend::trajectories;
    }
    throw ValidationError("unknown backend: " + name +
                          " (expected ideal, density or trajectories)");
}

const char *backend_name(Backend backend) {
    switch (backend) {
    case Backend::ideal:
        return "ideal";
    case Backend::density:
        return "density";
    case Backend::trajectories:
        return "trajectories";
    }
    return "?";
}

NoiseSchedule schedule_from_json(const json &doc) {
    require(doc.is_object() && doc.contains("kind"),
            "schedule needs a 'kind' field");
    const std::string kind = doc["kind"].get<std::string>();
    ScheduleTarget target = ScheduleTarget::gate_rates;
    if (doc.contains("target")) {
        target = parse_schedule_target(doc["target"].get<std::string>());
    }
    auto field = [&](const char *name) {
        require(doc.contains(name) && doc[name].is_number(),
                std::string("schedule needs numeric field '") + name + "'");
        return doc[name].get<double>();
    };
    if (kind == "constant") {
        return NoiseSchedule::constant(field("value"), target);
    }
    if (kind == "linear") {
        return NoiseSchedule::linear(field("from"), field("to"), target);
    }
    if (kind == "sinusoid") {
        return NoiseSchedule::sinusoid(field("mean"), field("amplitude"),
                                       field("period"), target);
    }
    if (kind == "random-walk") {
        require(doc.contains("seed"), "random-walk schedule needs a seed");
        return NoiseSchedule::random_walk(field("start"), field("step"),
                                          doc["seed"].get<uint64_t>(), target);
    }
    throw ValidationError("unknown schedule kind: " + kind);
}

json schedule_to_json(const NoiseSchedule &schedule) {
    json j;
    j["target"] = schedule_target_name(schedule.target());
    switch (schedule.kind()) {
    case NoiseSchedule::Kind::constant:
        j["kind"] = "constant";
        j["value"] = schedule.params()[0];
        break;
    case NoiseSchedule::Kind::linear:
        j["kind"] = "linear";
        j["from"] = schedule.params()[0];
        j["to"] = schedule.params()[1];
        break;
    case NoiseSchedule::Kind::sinusoid:
        j["kind"] = "sinusoid";
        j["mean"] = schedule.params()[0];
        j["amplitude"] = schedule.params()[1];
        j["period"] = schedule.params()[2];
        break;
    case NoiseSchedule::Kind::random_walk:
        j["kind"] = "random-walk";
        j["start"] = schedule.params()[0];
        j["step"] = schedule.params()[1];
        j["seed"] = schedule.walk_seed();
        break;
    }
    return j;
}

RunConfig run_config_from_json(const json &doc,
                               const std::filesystem::path &base_dir) {
    require(doc.is_object(), "run config must be a JSON object");
    RunConfig cfg;
    cfg.raw = doc;

    require(doc.contains("circuit"), "run config needs a 'circuit' field");
    const json &jc = doc["circuit"];
    if (jc.contains("file")) {
        cfg.circuit.file = base_dir / jc["file"].get<std::string>();
    } else if (jc.contains("generate")) {
        const json &jg = jc["generate"];
        for (const char *f : {"rows", "cols", "depth", "seed"}) {
            require(jg.contains(f),
                    std::string("circuit generator needs field '") + f + "'");
        }
        cfg.circuit.rows = jg["rows"].get<int>();
        cfg.circuit.cols = jg["cols"].get<int>();
        cfg.circuit.depth = jg["depth"].get<int>();
        cfg.circuit.seed = jg["seed"].get<uint64_t>();
    } else {
        throw ValidationError("'circuit' needs 'file' or 'generate'");
    }

    if (doc.contains("backend")) {
        cfg.backend = parse_backend(doc["backend"].get<std::string>());
    }
    if (doc.contains("noise")) {
        const json &jn = doc["noise"];
        if (jn.contains("r1")) {
            cfg.noise.r1 = jn["r1"].get<double>();
        }
        if (jn.contains("r2")) {
            cfg.noise.r2 = jn["r2"].get<double>();
        }
        if (jn.contains("eps_readout")) {
            cfg.noise.eps_readout = jn["eps_readout"].get<double>();
        }
        cfg.noise.validate();
    }
    if (doc.contains("schedule")) {
        cfg.schedule = schedule_from_json(doc["schedule"]);
    }
    if (doc.contains("corrupt")) {
        const json &jk = doc["corrupt"];
        if (jk.contains("eps")) {
            cfg.corrupt_eps = DistributionNoise(jk["eps"].get<double>());
        } else if (jk.contains("schedule")) {
            cfg.corrupt_schedule = schedule_from_json(jk["schedule"]);
            require(cfg.corrupt_schedule->target() ==
                        ScheduleTarget::bitflip_eps,
                    "corruption schedule must target bitflip-eps");
        } else {
            throw ValidationError("'corrupt' needs 'eps' or 'schedule'");
        }
        require(jk.contains("seed"), "'corrupt' needs a seed");
        cfg.corrupt_seed = jk["seed"].get<uint64_t>();
    }

    require(doc.contains("samples"), "run config needs a 'samples' count");
    cfg.samples = doc["samples"].get<size_t>();
    require(cfg.samples >= 1, "sample count must be at least 1");
    require(doc.contains("seed"), "run config needs a sampling 'seed'");
    cfg.seed = doc["seed"].get<uint64_t>();

    if (doc.contains("analysis")) {
        const json &ja = doc["analysis"];
        if (ja.contains("metric")) {
            cfg.metric = parse_metric(ja["metric"].get<std::string>());
        }
        if (ja.contains("B")) {
            cfg.B = ja["B"].get<int>();
        }
        if (ja.contains("stationarity_seed")) {
            cfg.stationarity_seed = ja["stationarity_seed"].get<uint64_t>();
        }
        if (ja.contains("max_degree")) {
            cfg.max_degree = ja["max_degree"].get<int>();
        }
        if (ja.contains("estimator")) {
            cfg.estimator =
                parse_estimator(ja["estimator"].get<std::string>());
        }
        if (ja.contains("decay_degree_lo")) {
            cfg.decay_degree_lo = ja["decay_degree_lo"].get<int>();
        }
        if (ja.contains("decay_degree_hi")) {
            cfg.decay_degree_hi = ja["decay_degree_hi"].get<int>();
        }
    }

    if (doc.contains("outputs")) {
        const json &jo = doc["outputs"];
        auto path_of = [&](const char *key) -> std::optional<std::filesystem::path> {
            if (jo.contains(key)) {
                return base_dir / jo[key].get<std::string>();
            }
            return std::nullopt;
        };
        cfg.samples_path = path_of("samples");
        cfg.circuit_path = path_of("circuit");
        cfg.spectrum_path = path_of("spectrum");
        cfg.report_path = path_of("report");
    }
    return cfg;
}

RunConfig parse_run_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw ValidationError("malformed run config " + path.string() + ": " +
                              e.what());
    }
    return run_config_from_json(doc, path.parent_path());
}

json run_pipeline(const RunConfig &config) {
    const QuantumCircuit circuit =
        config.circuit.file
            ? parse_circuit(*config.circuit.file)
            : generate_random_circuit(config.circuit.rows, config.circuit.cols,
                                      config.circuit.depth,
                                      config.circuit.seed);
    const int n = circuit.n();

    SampleSet samples = [&] {
        switch (config.backend) {
        case Backend::ideal:
            return sample_ideal(circuit, config.samples, config.seed);
        case Backend::density: {
            SampleSet s = draw_iid(run_density_matrix(circuit, config.noise),
                                   config.samples, config.seed, "density");
            return s;
        }
        case Backend::trajectories:
        default:
            return sample_trajectories(circuit, config.noise, config.schedule,
                                       config.samples, config.seed);
        }
    }();

    if (config.corrupt_eps) {
        samples =
            corrupt_samples(samples, *config.corrupt_eps, config.corrupt_seed);
    } else if (config.corrupt_schedule) {
        samples = corrupt_samples(samples, *config.corrupt_schedule,
                                  config.corrupt_seed);
    }

    const OutcomeDistribution ideal = ideal_distribution(circuit);
    const DegreeProfile ideal_profile = exact_degree_profile(ideal);

    const int max_degree =
        config.max_degree >= 0 ? config.max_degree : std::min(n, 8);
    const DegreeProfileEstimate estimate = estimate_degree_profile(
        samples, max_degree, config.estimator, config.stationarity_seed);

    const StationarityReport stationarity = stationarity_test(
        samples, config.B, config.metric, config.stationarity_seed);

    const double xeb = xeb_fidelity(samples, ideal);

    json report;
    report["kind"] = "report";
    report["config"] = config.raw;
    report["config_hash"] = config_hash(config.raw);
    report["circuit"] = {{"n", n},
                         {"rows", circuit.rows()},
                         {"cols", circuit.cols()},
                         {"depth", circuit.depth()}};
    report["sampling"] = {{"backend", backend_name(config.backend)},
                          {"count", samples.size()},
                          {"seed", config.seed}};
    report["xeb"] = xeb;
    report["stationarity"] = to_json(stationarity);
    report["spectrum"] = to_json(estimate);
    report["ideal_profile"] = ideal_profile.weight;

    const int decay_hi =
        config.decay_degree_hi >= 0 ? config.decay_degree_hi : max_degree;
    try {
        const DecayFit fit = decay_fit(estimate, ideal_profile,
                                       config.decay_degree_lo, decay_hi);
        report["decay"] = to_json(fit);
    } catch (const ValidationError &e) {
        report["decay"] = {{"error", e.what()}};
    }

    if (config.circuit_path) {
        write_circuit(circuit, *config.circuit_path,
                      config.circuit.file ? std::string{}
                                          : GatesetConfig::standard().descriptor(),
                      config.circuit.file ? std::optional<uint64_t>{}
                                          : config.circuit.seed);
    }
    if (config.samples_path) {
        write_samples(samples, *config.samples_path);
    }
    if (config.spectrum_path) {
        SpectrumTable table = SpectrumTable::from(estimate);
        table.add_ratio(ideal_profile);
        write_spectrum_csv(table, *config.spectrum_path);
    }
    if (config.report_path) {
        write_report(report, *config.report_path);
    }
    return report;
}

} // namespace nisqlab
