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

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "nisqlab/chaostats.hpp"
#include "nisqlab/circuit.hpp"
#include "nisqlab/noise.hpp"
#include "nisqlab/trajectory.hpp"

namespace nisqlab {

enum class Backend { ideal, density, trajectories };
Backend parse_backend(const std::string &name);
const char *backend_name(Backend backend);

/// Where the circuit comes from: an explicit file, or generator parameters.
struct CircuitSource {
    std::optional<std::filesystem::path> file;
    int rows = 0, cols = 0, depth = 0;
    uint64_t seed = 0;
};

/// One reproducible pipeline: circuit -> samples -> (optional corruption) ->
/// spectrum + stationarity + decay + XEB -> files. Everything is keyed by
/// explicit seeds; rerunning the same config reproduces every output byte.
struct RunConfig {
    CircuitSource circuit;
    Backend backend = Backend::ideal;
    GateNoise noise;
    std::optional<NoiseSchedule> schedule;

    std::optional<DistributionNoise> corrupt_eps;
    std::optional<NoiseSchedule> corrupt_schedule;
    uint64_t corrupt_seed = 0;

    size_t samples = 0;
    uint64_t seed = 0;

    Metric metric = Metric::l2;
    int B = 999;
    uint64_t stationarity_seed = 0;
    int max_degree = -1; // default: min(n, 8)
    ProfileEstimator estimator = ProfileEstimator::cross_split;
    int decay_degree_lo = 1;
    int decay_degree_hi = -1; // default: max_degree

    std::optional<std::filesystem::path> samples_path;
    std::optional<std::filesystem::path> circuit_path;
    std::optional<std::filesystem::path> spectrum_path;
    std::optional<std::filesystem::path> report_path;

    nlohmann::json raw; // canonical source document, hashed for provenance
};

RunConfig parse_run_config(const std::filesystem::path &path);
RunConfig run_config_from_json(const nlohmann::json &doc,
                               const std::filesystem::path &base_dir);

NoiseSchedule schedule_from_json(const nlohmann::json &doc);
nlohmann::json schedule_to_json(const NoiseSchedule &schedule);

/// Executes the pipeline, writes the configured outputs, and returns the
/// report document.
nlohmann::json run_pipeline(const RunConfig &config);

} // namespace nisqlab
