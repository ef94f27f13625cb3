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

#include <json.hpp>

#include "nisqlab/chaostats.hpp"

namespace nisqlab {

/// Plot-ready degree/weight table. Serializes to CSV with columns
/// degree,weight[,stderr][,ratio]; optional columns are present exactly
/// when the vectors are nonempty. Formatting is fixed (%.17g), so repeated
/// writes of the same table are byte-identical.
struct SpectrumTable {
    std::vector<int> degree;
    std::vector<double> weight;
    std::vector<double> std_err; // empty, or aligned with degree
    std::vector<double> ratio;   // empty, or aligned with degree

    static SpectrumTable from(const DegreeProfile &profile);
    static SpectrumTable from(const DegreeProfileEstimate &estimate);

    /// Adds ratio = weight / ref.weight where the reference is positive.
    void add_ratio(const DegreeProfile &ref);
};

void write_spectrum_csv(const SpectrumTable &table,
                        const std::filesystem::path &path);
SpectrumTable parse_spectrum_csv(const std::filesystem::path &path);

/// Decay fit aligned on the explicit degree columns of two tables.
DecayFit decay_fit(const SpectrumTable &noisy, const SpectrumTable &ref,
                   int degree_lo, int degree_hi);

nlohmann::json to_json(const StationarityReport &report);
nlohmann::json to_json(const DecayFit &fit);
nlohmann::json to_json(const DegreeProfileEstimate &estimate);

/// Pretty-printed JSON document; human-diffable and byte-stable.
void write_report(const nlohmann::json &report,
                  const std::filesystem::path &path);

/// FNV-1a 64-bit over a canonical (compact, key-sorted) dump; reports embed
/// it so an output can be traced back to the exact configuration.
std::string config_hash(const nlohmann::json &config);

} // namespace nisqlab
