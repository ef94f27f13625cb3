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

#include "nisqlab/circuit_io.hpp"

#include <fstream>

#include <json.hpp>

namespace nisqlab {

namespace {

using nlohmann::json;

json matrix_to_json(const c64 *data, int dim) {
    json rows = json::array();
    for (int r = 0; r < dim; ++r) {
        json row = json::array();
        for (int c = 0; c < dim; ++c) {
            const c64 &v = data[r * dim + c];
            row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Mat, int Dim>
Mat matrix_from_json(const json &doc, const std::string &where) {
    Mat m;
    require(doc.is_array() && doc.size() == Dim,
            where + ": matrix must have " + std::to_string(Dim) + " rows");
    for (int r = 0; r < Dim; ++r) {
        const json &row = doc[static_cast<size_t>(r)];
        require(row.is_array() && row.size() == Dim,
                where + ": matrix rows must have " + std::to_string(Dim) +
                    " entries");
        for (int c = 0; c < Dim; ++c) {
            const json &entry = row[static_cast<size_t>(c)];
            require(entry.is_array() && entry.size() == 2 &&
                        entry[0].is_number() && entry[1].is_number(),
                    where + ": matrix entries must be [re, im] pairs");
            m(r, c) = c64{entry[0].get<double>(), entry[1].get<double>()};
        }
    }
    return m;
}

json gate_to_json(const SingleQubitGate &g) {
    json out;
    out["q"] = g.q;
    if (!g.name.empty()) {
        out["name"] = g.name;
    } else {
        out["matrix"] = matrix_to_json(g.u.a.data(), 2);
    }
    return out;
}

json gate_to_json(const TwoQubitGate &g) {
    json out;
    out["a"] = g.a;
    out["b"] = g.b;
    if (!g.name.empty()) {
        out["name"] = g.name;
    } else {
        out["matrix"] = matrix_to_json(g.u.a.data(), 4);
    }
    return out;
}

SingleQubitGate single_from_json(const json &doc, const std::string &where) {
    require(doc.is_object() && doc.contains("q") &&
                doc["q"].is_number_integer(),
            where + ": gate needs an integer 'q'");
    SingleQubitGate g;
    g.q = doc["q"].get<int>();
    if (doc.contains("name")) {
        g.name = doc["name"].get<std::string>();
        auto u = gates::single_by_name(g.name);
        require(u.has_value(), where + ": unknown gate name '" + g.name + "'");
        g.u = *u;
    } else if (doc.contains("matrix")) {
        g.u = matrix_from_json<Mat2, 2>(doc["matrix"], where);
    } else {
        throw ValidationError(where + ": gate needs 'name' or 'matrix'");
    }
    require(unitarity_defect(g.u) < kUnitaryTol,
            where + ": matrix is not unitary");
    return g;
}

TwoQubitGate two_from_json(const json &doc, const std::string &where) {
    require(doc.is_object() && doc.contains("a") && doc.contains("b") &&
                doc["a"].is_number_integer() && doc["b"].is_number_integer(),
            where + ": pair needs integer 'a' and 'b'");
    TwoQubitGate g;
    g.a = doc["a"].get<int>();
    g.b = doc["b"].get<int>();
    if (doc.contains("name")) {
        g.name = doc["name"].get<std::string>();
        auto u = gates::two_by_name(g.name);
        require(u.has_value(), where + ": unknown gate name '" + g.name + "'");
        g.u = *u;
    } else if (doc.contains("matrix")) {
        g.u = matrix_from_json<Mat4, 4>(doc["matrix"], where);
    } else {
        throw ValidationError(where + ": pair needs 'name' or 'matrix'");
    }
    require(unitarity_defect(g.u) < kUnitaryTol,
            where + ": matrix is not unitary");
    return g;
}

} // namespace

QuantumCircuit parse_circuit(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw ValidationError("malformed circuit document " + path.string() +
                              ": " + e.what());
    }
    require(doc.is_object(), "circuit document must be a JSON object");
    for (const char *field : {"n", "rows", "cols", "layers"}) {
        require(doc.contains(field),
                std::string("circuit document missing field '") + field + "'");
    }
    const int rows = doc["rows"].get<int>();
    const int cols = doc["cols"].get<int>();
    require(doc["n"].get<int>() == rows * cols,
            "circuit field n must equal rows*cols");

    std::vector<Layer> layers;
    const json &jlayers = doc["layers"];
    require(jlayers.is_array(), "'layers' must be an array");
    for (size_t l = 0; l < jlayers.size(); ++l) {
        const json &jl = jlayers[l];
        const std::string where = "layer " + std::to_string(l);
        require(jl.is_object() && jl.contains("kind"),
                where + ": layer needs a 'kind'");
        const std::string kind = jl["kind"].get<std::string>();
        if (kind == "single") {
            require(jl.contains("gates") && jl["gates"].is_array(),
                    where + ": single layer needs a 'gates' array");
            SingleQubitLayer sl;
            for (const json &jg : jl["gates"]) {
                sl.gates.push_back(single_from_json(jg, where));
            }
            layers.emplace_back(std::move(sl));
        } else if (kind == "two") {
            require(jl.contains("pairs") && jl["pairs"].is_array(),
                    where + ": two-qubit layer needs a 'pairs' array");
            TwoQubitLayer tl;
            for (const json &jg : jl["pairs"]) {
                tl.gates.push_back(two_from_json(jg, where));
            }
            layers.emplace_back(std::move(tl));
        } else {
            throw ValidationError(where + ": unknown layer kind '" + kind +
                                  "'");
        }
    }
    // The circuit constructor re-checks unitarity, disjointness, adjacency.
    return QuantumCircuit(rows, cols, std::move(layers));
}

void write_circuit(const QuantumCircuit &circuit,
                   const std::filesystem::path &path,
                   const std::string &gateset_descriptor,
                   std::optional<uint64_t> seed) {
    json doc;
    doc["kind"] = "circuit";
    doc["n"] = circuit.n();
    doc["rows"] = circuit.rows();
    doc["cols"] = circuit.cols();
    if (!gateset_descriptor.empty()) {
        doc["gateset"] = gateset_descriptor;
    }
    if (seed) {
        doc["seed"] = *seed;
    }
    json jlayers = json::array();
    for (const Layer &layer : circuit.layers()) {
        json jl;
        if (const auto *sl = std::get_if<SingleQubitLayer>(&layer)) {
            jl["kind"] = "single";
            json jg = json::array();
            for (const SingleQubitGate &g : sl->gates) {
                jg.push_back(gate_to_json(g));
            }
            jl["gates"] = std::move(jg);
        } else {
            jl["kind"] = "two";
            json jg = json::array();
            for (const TwoQubitGate &g :
                 std::get<TwoQubitLayer>(layer).gates) {
                jg.push_back(gate_to_json(g));
            }
            jl["pairs"] = std::move(jg);
        }
        jlayers.push_back(std::move(jl));
    }
    doc["layers"] = std::move(jlayers);

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << doc.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

} // namespace nisqlab
