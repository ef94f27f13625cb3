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

#include "nisqlab/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nisqlab {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

SpectrumTable SpectrumTable::from(const DegreeProfile &profile) {
    SpectrumTable t;
    for (int d = 0; d <= profile.n; ++d) {
        t.degree.push_back(d);
        t.weight.push_back(profile.weight[static_cast<size_t>(d)]);
    }
    return t;
}

SpectrumTable SpectrumTable::from(const DegreeProfileEstimate &estimate) {
    SpectrumTable t;
    for (int d = 0; d <= estimate.max_degree; ++d) {
        t.degree.push_back(d);
        t.weight.push_back(estimate.weight[static_cast<size_t>(d)]);
        t.std_err.push_back(estimate.std_err[static_cast<size_t>(d)]);
    }
    return t;
}

void SpectrumTable::add_ratio(const DegreeProfile &ref) {
    ratio.assign(degree.size(), 0.0);
    for (size_t i = 0; i < degree.size(); ++i) {
        const int d = degree[i];
        if (d <= ref.n && ref.weight[static_cast<size_t>(d)] > 0.0) {
            ratio[i] = weight[i] / ref.weight[static_cast<size_t>(d)];
        }
    }
}

void write_spectrum_csv(const SpectrumTable &table,
                        const std::filesystem::path &path) {
    require(table.degree.size() == table.weight.size(),
            "spectrum table is misaligned");
    require(table.std_err.empty() ||
                table.std_err.size() == table.degree.size(),
            "stderr column is misaligned");
    require(table.ratio.empty() || table.ratio.size() == table.degree.size(),
            "ratio column is misaligned");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "degree,weight";
    if (!table.std_err.empty()) {
        out << ",stderr";
    }
    if (!table.ratio.empty()) {
        out << ",ratio";
    }
    out << '\n';
    for (size_t i = 0; i < table.degree.size(); ++i) {
        out << table.degree[i] << ',' << fmt_double(table.weight[i]);
        if (!table.std_err.empty()) {
            out << ',' << fmt_double(table.std_err[i]);
        }
        if (!table.ratio.empty()) {
            out << ',' << fmt_double(table.ratio[i]);
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

SpectrumTable parse_spectrum_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string header;
    require(static_cast<bool>(std::getline(in, header)),
            "empty spectrum CSV " + path.string());
    if (!header.empty() && header.back() == '\r') {
        header.pop_back();
    }
    std::vector<std::string> columns;
    {
        std::istringstream hs(header);
        std::string col;
        while (std::getline(hs, col, ',')) {
            columns.push_back(col);
        }
    }
    require(columns.size() >= 2 && columns[0] == "degree" &&
                columns[1] == "weight",
            "spectrum CSV must start with degree,weight columns");
    int stderr_col = -1, ratio_col = -1;
    for (size_t i = 2; i < columns.size(); ++i) {
        if (columns[i] == "stderr") {
            stderr_col = static_cast<int>(i);
        } else if (columns[i] == "ratio") {
            ratio_col = static_cast<int>(i);
        } else {
            throw ValidationError("unknown spectrum column '" + columns[i] +
                                  "' in " + path.string());
        }
    }

    SpectrumTable t;
    std::string line;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::vector<std::string> fields;
        std::string field;
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        require(fields.size() == columns.size(),
                "row with " + std::to_string(fields.size()) + " fields at " +
                    path.string() + ":" + std::to_string(line_no));
        try {
            t.degree.push_back(std::stoi(fields[0]));
            t.weight.push_back(std::stod(fields[1]));
            if (stderr_col >= 0) {
                t.std_err.push_back(
                    std::stod(fields[static_cast<size_t>(stderr_col)]));
            }
            if (ratio_col >= 0) {
                t.ratio.push_back(
                    std::stod(fields[static_cast<size_t>(ratio_col)]));
            }
        } catch (const std::exception &) {
            throw ValidationError("bad numeric field at " + path.string() +
                                  ":" + std::to_string(line_no));
        }
    }
    require(!t.degree.empty(), "spectrum CSV has no data rows");
    return t;
}

DecayFit decay_fit(const SpectrumTable &noisy, const SpectrumTable &ref,
                   int degree_lo, int degree_hi) {
    int max_d = 0;
    for (int d : noisy.degree) {
        max_d = std::max(max_d, d);
    }
    for (int d : ref.degree) {
        max_d = std::max(max_d, d);
    }
    // Re-pack onto dense degree-indexed vectors for the shared fit core.
    std::vector<double> wn(static_cast<size_t>(max_d) + 1, 0.0);
    std::vector<double> sn(static_cast<size_t>(max_d) + 1, 0.0);
    std::vector<double> wr(static_cast<size_t>(max_d) + 1, 0.0);
    for (size_t i = 0; i < noisy.degree.size(); ++i) {
        wn[static_cast<size_t>(noisy.degree[i])] = noisy.weight[i];
        if (!noisy.std_err.empty()) {
            sn[static_cast<size_t>(noisy.degree[i])] = noisy.std_err[i];
        }
    }
    for (size_t i = 0; i < ref.degree.size(); ++i) {
        wr[static_cast<size_t>(ref.degree[i])] = ref.weight[i];
    }
    DegreeProfileEstimate est;
    est.n = max_d;
    est.max_degree = max_d;
    est.weight = std::move(wn);
    est.std_err = std::move(sn);
    DegreeProfile profile{max_d, std::move(wr)};
    return decay_fit(est, profile, degree_lo, degree_hi);
}

nlohmann::json to_json(const StationarityReport &report) {
    nlohmann::json j;
    j["observed_distance"] = report.observed_distance;
    j["p_value"] = report.p_value;
    j["metric"] = metric_name(report.metric);
    j["B"] = report.B;
    j["seed"] = report.seed;
    j["dropped_last"] = report.dropped_last;
    j["sample_count"] = report.sample_count;
    j["null_histogram"] = report.null_distances;
    return j;
}

nlohmann::json to_json(const DecayFit &fit) {
    nlohmann::json j;
    j["degrees"] = fit.degrees;
    j["log_ratios"] = fit.log_ratios;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["r_squared"] = fit.r_squared;
    j["effective_rho"] = fit.effective_rho;
    return j;
}

nlohmann::json to_json(const DegreeProfileEstimate &estimate) {
    nlohmann::json j;
    j["n"] = estimate.n;
    j["max_degree"] = estimate.max_degree;
    j["estimator"] = estimate.estimator;
    j["sample_count"] = estimate.sample_count;
    j["weights"] = estimate.weight;
    j["std_errs"] = estimate.std_err;
    return j;
}

void write_report(const nlohmann::json &report,
                  const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << report.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

std::string config_hash(const nlohmann::json &config) {
    const std::string canonical = config.dump();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

} // namespace nisqlab
