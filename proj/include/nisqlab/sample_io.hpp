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

#include "nisqlab/bitstring.hpp"

namespace nisqlab {

/// Plain-text sample stream, interoperable with external device dumps:
///
///     # n=12
///     # source=trajectories      (optional)
///     # seed=42                  (optional)
///     # batches=1000,2000        (optional)
///     010011010111
///     ...
///
/// Each data line has exactly n characters of 0/1; character i is bit i of
/// the sample. Stream order is file order. Unrecognized '#' lines are
/// comments. Malformed lines are rejected with their line number.
SampleSet parse_samples(const std::filesystem::path &path);

/// Byte-stable writer for the format above; rejects empty sets.
void write_samples(const SampleSet &s, const std::filesystem::path &path);

/// Converter hook for third-party dumps: each input line is split into
/// fields (by `delimiter`, or any whitespace run when delimiter is '\0'),
/// and bit_columns[i] names the 0-based field that becomes bit i. Fields
/// must be literal 0/1; anything else is rejected with its line number.
SampleSet ingest_columns(const std::filesystem::path &path,
                         const std::vector<int> &bit_columns,
                         char delimiter = '\0', size_t skip_rows = 0,
                         std::string source = "ingest");

} // namespace nisqlab
