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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nisqlab/errors.hpp"

namespace nisqlab {

/// Red/blue coloring of a rectangular board under the constraint that every
/// axis-aligned 2x2 window contains an even number of red cells. Indexing is
/// mathematical: row 0 is the bottom row, column 0 the left column.
enum class CellColor : uint8_t { blue = 0, red = 1 };

class Board {
  public:
    Board(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CellColor at(int r, int c) const { return cells_[offset(r, c)]; }
    void set(int r, int c, CellColor color) { cells_[offset(r, c)] = color; }

    /// One line per row, characters R/B, top row first.
    std::string to_text() const;
    static Board from_text(const std::string &text);

    friend bool operator==(const Board &, const Board &) = default;

  private:
    size_t offset(int r, int c) const {
        require(r >= 0 && r < rows_ && c >= 0 && c < cols_,
                "cell index out of range");
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
               static_cast<size_t>(c);
    }

    int rows_;
    int cols_;
    std::vector<CellColor> cells_;
};

/// True iff every 2x2 window has an even red count.
bool validate(const Board &board);

/// The unique valid board extending an arbitrary bottom row and left
/// column; the shared corner cell must agree. Each remaining cell is forced
/// by the parity of its already-filled 2x2 neighbors.
Board complete_from_seed(std::span<const CellColor> bottom_row,
                         std::span<const CellColor> left_column);

/// The unique valid board agreeing with one full row and one full column
/// (any indices); parity propagates outward through all four quadrants.
Board reconstruct_from(int row_index, std::span<const CellColor> row_values,
                       int col_index, std::span<const CellColor> col_values);

/// Number of valid colorings: 2^(rows + cols - 1). Capped at exponent 24.
uint64_t count_valid(int rows, int cols);

/// Seed cells that may be colored freely: rows + cols - 1.
int free_cell_count(int rows, int cols);

} // namespace nisqlab
