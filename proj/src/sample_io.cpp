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

#include "nisqlab/sample_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace nisqlab {

namespace {

std::string at_line(const std::filesystem::path &path, size_t line_no) {
    return path.string() + ":" + std::to_string(line_no);
}

template <typename T>
T parse_int(const std::string &text, const std::filesystem::path &path,
            size_t line_no) {
    T value{};
    const char *begin = text.data();
    const char *end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError("bad integer '" + text + "' at " +
                              at_line(path, line_no));
    }
    return value;
}

} // namespace

SampleSet parse_samples(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }

    std::optional<int> n;
    std::string source;
    std::optional<uint64_t> seed;
    std::vector<size_t> batches;
    std::vector<uint32_t> samples;
    bool ordered = true;
    std::string circuit_ref;

    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') {
                body.erase(0, 1);
            }
            const auto eq = body.find('=');
            const std::string key =
                eq == std::string::npos ? body : body.substr(0, eq);
            const std::string value =
                eq == std::string::npos ? "" : body.substr(eq + 1);
            if (key == "n") {
                n = parse_int<int>(value, path, line_no);
                check_bit_count(*n);
            } else if (key == "source") {
                source = value;
            } else if (key == "seed") {
                seed = parse_int<uint64_t>(value, path, line_no);
            } else if (key == "batches") {
                std::istringstream items(value);
                std::string item;
                while (std::getline(items, item, ',')) {
                    batches.push_back(
                        parse_int<size_t>(item, path, line_no));
                }
            } else if (key == "ordered") {
                if (value == "1" || value == "true") {
                    ordered = true;
                } else if (value == "0" || value == "false") {
                    ordered = false;
                } else {
                    throw ValidationError("bad ordered flag '" + value +
                                          "' at " + at_line(path, line_no));
                }
            } else if (key == "circuit") {
                circuit_ref = value;
            }
            // other '#' lines are comments
            continue;
        }
        if (!n) {
            throw ValidationError("missing '# n=' header before data at " +
                                  at_line(path, line_no));
        }
        if (static_cast<int>(line.size()) != *n) {
            throw ValidationError(
                "line of length " + std::to_string(line.size()) +
                " under n=" + std::to_string(*n) + " at " +
                at_line(path, line_no));
        }
        uint32_t index = 0;
        for (int i = 0; i < *n; ++i) {
            const char ch = line[static_cast<size_t>(i)];
            if (ch == '1') {
                index |= 1u << i;
            } else if (ch != '0') {
                throw ValidationError(std::string("character '") + ch +
                                      "' is not 0/1 at " +
                                      at_line(path, line_no));
            }
        }
        samples.push_back(index);
    }
    if (!n) {
        throw ValidationError("missing '# n=' header in " + path.string());
    }

    SampleSet out(*n, source);
    out.assign(std::move(samples));
    if (seed) {
        out.set_seed(*seed);
    }
    out.set_ordered(ordered);
    if (!circuit_ref.empty()) {
        out.set_circuit_ref(circuit_ref);
    }
    for (size_t b : batches) {
        require(b <= out.size(), "batch boundary " + std::to_string(b) +
                                     " exceeds sample count in " +
                                     path.string());
    }
    out.set_batch_boundaries(std::move(batches));
    return out;
}

void write_samples(const SampleSet &s, const std::filesystem::path &path) {
    require(!s.empty(), "refusing to write an empty sample set");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "# n=" << s.n() << '\n';
    if (!s.source().empty()) {
        out << "# source=" << s.source() << '\n';
    }
    if (s.seed()) {
        out << "# seed=" << *s.seed() << '\n';
    }
    if (!s.ordered()) {
        out << "# ordered=0\n";
    }
    if (!s.circuit_ref().empty()) {
        out << "# circuit=" << s.circuit_ref() << '\n';
    }
    if (!s.batch_boundaries().empty()) {
        out << "# batches=";
        for (size_t i = 0; i < s.batch_boundaries().size(); ++i) {
            if (i) {
                out << ',';
            }
            out << s.batch_boundaries()[i];
        }
        out << '\n';
    }
    std::string line(static_cast<size_t>(s.n()), '0');
    for (size_t i = 0; i < s.size(); ++i) {
        const uint32_t index = s.index_at(i);
        for (int j = 0; j < s.n(); ++j) {
            line[static_cast<size_t>(j)] = (index >> j) & 1u ? '1' : '0';
        }
        out << line << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

SampleSet ingest_columns(const std::filesystem::path &path,
                         const std::vector<int> &bit_columns, char delimiter,
                         size_t skip_rows, std::string source) {
    check_bit_count(static_cast<int>(bit_columns.size()));
    for (int c : bit_columns) {
        require(c >= 0, "column indices must be nonnegative");
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<uint32_t> samples;
    std::string line;
    size_t line_no = 0;
    std::vector<std::string> fields;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no <= skip_rows || line.empty()) {
            continue;
        }
        fields.clear();
        if (delimiter == '\0') {
            std::istringstream ls(line);
            std::string field;
            while (ls >> field) {
                fields.push_back(field);
            }
        } else {
            std::istringstream ls(line);
            std::string field;
            while (std::getline(ls, field, delimiter)) {
                fields.push_back(field);
            }
        }
        uint32_t index = 0;
        for (size_t i = 0; i < bit_columns.size(); ++i) {
            const size_t col = static_cast<size_t>(bit_columns[i]);
            require(col < fields.size(),
                    "line has only " + std::to_string(fields.size()) +
                        " fields, need column " + std::to_string(col) +
                        " at " + at_line(path, line_no));
            const std::string &f = fields[col];
            if (f == "1") {
                index |= 1u << i;
            } else {
                require(f == "0", "field '" + f + "' is not 0/1 at " +
                                      at_line(path, line_no));
            }
        }
        samples.push_back(index);
    }
    SampleSet out(static_cast<int>(bit_columns.size()), std::move(source));
    out.assign(std::move(samples));
    return out;
}

} // namespace nisqlab
