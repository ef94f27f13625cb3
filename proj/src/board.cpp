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

#include "nisqlab/board.hpp"

#include <sstream>

namespace nisqlab {

namespace {

constexpr int kMaxBoardSide = 64;

void check_dims(int rows, int cols) {
    require(rows >= 1 && rows <= kMaxBoardSide && cols >= 1 &&
                cols <= kMaxBoardSide,
            "board sides must be in [1, " + std::to_string(kMaxBoardSide) +
                "]");
}

int red(CellColor c) { return c == CellColor::red ? 1 : 0; }

CellColor color_of(int parity) {
    return parity ? CellColor::red : CellColor::blue;
}

} // namespace

Board::Board(int rows, int cols)
    : rows_(rows), cols_(cols),
      cells_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
             CellColor::blue) {
    check_dims(rows, cols);
}

std::string Board::to_text() const {
    std::string out;
    out.reserve(static_cast<size_t>(rows_) *
                (static_cast<size_t>(cols_) + 1));
    for (int r = rows_ - 1; r >= 0; --r) {
        for (int c = 0; c < cols_; ++c) {
            out += at(r, c) == CellColor::red ? 'R' : 'B';
        }
        out += '\n';
    }
    return out;
}

Board Board::from_text(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            lines.push_back(line);
        }
    }
    require(!lines.empty(), "board text is empty");
    const int rows = static_cast<int>(lines.size());
    const int cols = static_cast<int>(lines[0].size());
    Board board(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const std::string &row = lines[static_cast<size_t>(i)];
        require(static_cast<int>(row.size()) == cols,
                "board rows must have equal length");
        for (int c = 0; c < cols; ++c) {
            const char ch = row[static_cast<size_t>(c)];
            require(ch == 'R' || ch == 'B',
                    std::string("board cells must be R or B, got '") + ch +
                        "'");
            board.set(rows - 1 - i, c,
                      ch == 'R' ? CellColor::red : CellColor::blue);
        }
    }
    return board;
}

bool validate(const Board &board) {
    for (int r = 0; r + 1 < board.rows(); ++r) {
        for (int c = 0; c + 1 < board.cols(); ++c) {
            const int count = red(board.at(r, c)) + red(board.at(r, c + 1)) +
                              red(board.at(r + 1, c)) +
                              red(board.at(r + 1, c + 1));
            if (count % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

Board complete_from_seed(std::span<const CellColor> bottom_row,
                         std::span<const CellColor> left_column) {
    const int cols = static_cast<int>(bottom_row.size());
    const int rows = static_cast<int>(left_column.size());
    check_dims(rows, cols);
    require(bottom_row[0] == left_column[0],
            "bottom row and left column disagree on the corner cell");
    Board board(rows, cols);
    for (int c = 0; c < cols; ++c) {
        board.set(0, c, bottom_row[static_cast<size_t>(c)]);
    }
    for (int r = 0; r < rows; ++r) {
        board.set(r, 0, left_column[static_cast<size_t>(r)]);
    }
    for (int r = 1; r < rows; ++r) {
        for (int c = 1; c < cols; ++c) {
            const int parity = red(board.at(r - 1, c - 1)) ^
                               red(board.at(r - 1, c)) ^
                               red(board.at(r, c - 1));
            board.set(r, c, color_of(parity));
        }
    }
    return board;
}

Board reconstruct_from(int row_index, std::span<const CellColor> row_values,
                       int col_index, std::span<const CellColor> col_values) {
    const int cols = static_cast<int>(row_values.size());
    const int rows = static_cast<int>(col_values.size());
    check_dims(rows, cols);
    require(row_index >= 0 && row_index < rows, "row index out of range");
    require(col_index >= 0 && col_index < cols, "column index out of range");
    require(row_values[static_cast<size_t>(col_index)] ==
                col_values[static_cast<size_t>(row_index)],
            "given row and column disagree at their intersection");

    Board board(rows, cols);
    for (int c = 0; c < cols; ++c) {
        board.set(row_index, c, row_values[static_cast<size_t>(c)]);
    }
    for (int r = 0; r < rows; ++r) {
        board.set(r, col_index, col_values[static_cast<size_t>(r)]);
    }

    // Walk outward from the cross; each cell is forced by the 2x2 window on
    // its cross-facing side, whose other three cells are already known.
    for (int dr = 1; dr < rows; ++dr) {
        for (int sr : {-1, 1}) {
            const int r = row_index + sr * dr;
            if (r < 0 || r >= rows) {
                continue;
            }
            const int rn = r - sr; // one step back toward the known row
            for (int dc = 1; dc < cols; ++dc) {
                for (int sc : {-1, 1}) {
                    const int c = col_index + sc * dc;
                    if (c < 0 || c >= cols) {
                        continue;
                    }
                    const int cn = c - sc;
                    const int parity = red(board.at(rn, cn)) ^
                                       red(board.at(rn, c)) ^
                                       red(board.at(r, cn));
                    board.set(r, c, color_of(parity));
                }
            }
        }
    }
    return board;
}

uint64_t count_valid(int rows, int cols) {
    check_dims(rows, cols);
    const int exponent = rows + cols - 1;
    require(exponent <= 24,
            "closed-form count is capped at rows + cols - 1 <= 24");
    return uint64_t{1} << exponent;
}

int free_cell_count(int rows, int cols) {
    check_dims(rows, cols);
    return rows + cols - 1;
}

} // namespace nisqlab
