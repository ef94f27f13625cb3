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

#include "nisqlab/circuit.hpp"

namespace nisqlab {

/// Circuit file: a JSON document with fields n, rows, cols, gateset, seed
/// (optional provenance) and an explicit layer list. Gates are either named
/// ("sx", "cz", ...) or carry a raw matrix as rows of [re, im] pairs.
/// Matrices are re-validated for unitarity on parse; malformed documents,
/// non-unitary matrices and overlapping or non-adjacent pairs are rejected.
QuantumCircuit parse_circuit(const std::filesystem::path &path);

void write_circuit(const QuantumCircuit &circuit,
                   const std::filesystem::path &path,
                   const std::string &gateset_descriptor = {},
                   std::optional<uint64_t> seed = {});

} // namespace nisqlab
