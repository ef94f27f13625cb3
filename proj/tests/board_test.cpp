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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "nisqlab/board.hpp"
#include "nisqlab/rng.hpp"

using namespace nisqlab;

namespace {

Board board_from_mask(int rows, int cols, uint32_t mask) {
    Board b(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int bit = (mask >> (r * cols + c)) & 1;
            b.set(r, c, bit ? CellColor::red : CellColor::blue);
        }
    }
    return b;
}

std::vector<Board> all_valid_boards(int rows, int cols) {
    std::vector<Board> out;
    for (uint32_t mask = 0; mask < (1u << (rows * cols)); ++mask) {
        Board b = board_from_mask(rows, cols, mask);
        if (validate(b)) {
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<CellColor> colors_from_bits(uint32_t bits, int len) {
    std::vector<CellColor> out;
    for (int i = 0; i < len; ++i) {
        out.push_back((bits >> i) & 1 ? CellColor::red : CellColor::blue);
    }
    return out;
}

} // namespace

TEST_CASE("validator on elementary boards") {
    Board blue(3, 3);
    CHECK(validate(blue));

    Board one_red(2, 2);
    one_red.set(0, 0, CellColor::red);
    CHECK(!validate(one_red));

    Board two_red(2, 2);
    two_red.set(0, 0, CellColor::red);
    two_red.set(1, 1, CellColor::red);
    CHECK(validate(two_red));
}

TEST_CASE("2x2 completion is parity-forced") {
    // bottom row (red, blue), left column (red, blue): top-right must be red
    const std::vector<CellColor> bottom{CellColor::red, CellColor::blue};
    const std::vector<CellColor> left{CellColor::red, CellColor::blue};
    Board b = complete_from_seed(bottom, left);
    CHECK(b.at(1, 1) == CellColor::red);
    CHECK(validate(b));

    // all-blue seed stays all blue
    const std::vector<CellColor> blue_row(5, CellColor::blue);
    const std::vector<CellColor> blue_col(4, CellColor::blue);
    Board all_blue = complete_from_seed(blue_row, blue_col);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 5; ++c) {
            CHECK(all_blue.at(r, c) == CellColor::blue);
        }
    }
}

TEST_CASE("corner mismatch is rejected") {
    const std::vector<CellColor> bottom{CellColor::red, CellColor::blue};
    const std::vector<CellColor> left{CellColor::blue, CellColor::blue};
    CHECK_THROWS_AS(complete_from_seed(bottom, left), ValidationError);
}

TEST_CASE("every 3x3 seed yields the unique valid completion") {
    // brute-force oracle: enumerate all 512 colorings, bucket by seed
    auto valid = all_valid_boards(3, 3);
    CHECK(valid.size() == 32); // 2^(3+3-1)

    for (uint32_t seed_bits = 0; seed_bits < 32; ++seed_bits) {
        // bits 0..2: bottom row; bits 3..4: rest of left column
        auto bottom = colors_from_bits(seed_bits & 7u, 3);
        std::vector<CellColor> left{bottom[0]};
        left.push_back((seed_bits >> 3) & 1 ? CellColor::red
                                            : CellColor::blue);
        left.push_back((seed_bits >> 4) & 1 ? CellColor::red
                                            : CellColor::blue);
        Board completed = complete_from_seed(bottom, left);
        CHECK(validate(completed));

        int matches = 0;
        for (const Board &b : valid) {
            bool same_seed = true;
            for (int c = 0; c < 3; ++c) {
                same_seed &= b.at(0, c) == bottom[static_cast<size_t>(c)];
            }
            for (int r = 0; r < 3; ++r) {
                same_seed &= b.at(r, 0) == left[static_cast<size_t>(r)];
            }
            if (same_seed) {
                ++matches;
                CHECK(b == completed);
            }
        }
        CHECK(matches == 1); // uniqueness
    }
}

TEST_CASE("counting: brute force matches the closed form") {
    CHECK(all_valid_boards(2, 2).size() == 8);
    CHECK(count_valid(2, 2) == 8);
    CHECK(all_valid_boards(3, 3).size() == 32);
    CHECK(count_valid(3, 3) == 32);
    CHECK(all_valid_boards(2, 4).size() == 32);
    CHECK(count_valid(2, 4) == 32);
    CHECK(count_valid(7, 9) == 32768);
    CHECK(free_cell_count(7, 9) == 15);
    CHECK_THROWS_AS(count_valid(20, 20), ValidationError);
}

TEST_CASE("reconstruction from any row and column round-trips") {
    for (auto [rows, cols] : {std::pair{3, 3}, std::pair{3, 4}}) {
        auto valid = all_valid_boards(rows, cols);
        for (const Board &b : valid) {
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cols; ++c) {
                    std::vector<CellColor> row_values;
                    for (int cc = 0; cc < cols; ++cc) {
                        row_values.push_back(b.at(r, cc));
                    }
                    std::vector<CellColor> col_values;
                    for (int rr = 0; rr < rows; ++rr) {
                        col_values.push_back(b.at(rr, c));
                    }
                    Board rebuilt =
                        reconstruct_from(r, row_values, c, col_values);
                    CHECK(rebuilt == b);
                }
            }
        }
    }
}

TEST_CASE("reconstruction agrees with completion on the bottom-left seed") {
    Rng rng(81, RngStream::sample, 0);
    std::vector<CellColor> bottom, left;
    for (int c = 0; c < 6; ++c) {
        bottom.push_back(rng.bernoulli(0.5) ? CellColor::red
                                            : CellColor::blue);
    }
    left.push_back(bottom[0]);
    for (int r = 1; r < 5; ++r) {
        left.push_back(rng.bernoulli(0.5) ? CellColor::red : CellColor::blue);
    }
    Board a = complete_from_seed(bottom, left);
    Board b = reconstruct_from(0, bottom, 0, left);
    CHECK(a == b);
}

TEST_CASE("7x9 demo board: seed freedom and the off-edge reconstruction") {
    Rng rng(82, RngStream::sample, 0);
    std::vector<CellColor> bottom, left;
    for (int c = 0; c < 9; ++c) {
        bottom.push_back(rng.bernoulli(0.5) ? CellColor::red
                                            : CellColor::blue);
    }
    left.push_back(bottom[0]);
    for (int r = 1; r < 7; ++r) {
        left.push_back(rng.bernoulli(0.5) ? CellColor::red : CellColor::blue);
    }
    Board b = complete_from_seed(bottom, left);
    CHECK(validate(b));
    CHECK(free_cell_count(7, 9) == 15);

    // third row from the bottom (index 2) and second column from the right
    // (index 7) determine the whole board
    std::vector<CellColor> row_values;
    for (int c = 0; c < 9; ++c) {
        row_values.push_back(b.at(2, c));
    }
    std::vector<CellColor> col_values;
    for (int r = 0; r < 7; ++r) {
        col_values.push_back(b.at(r, 7));
    }
    CHECK(reconstruct_from(2, row_values, 7, col_values) == b);
}

TEST_CASE("intersection mismatch is rejected") {
    Board b(3, 3); // all blue is valid
    std::vector<CellColor> row_values(3, CellColor::blue);
    std::vector<CellColor> col_values(3, CellColor::blue);
    col_values[1] = CellColor::red; // disagrees with row at (1, 1)
    CHECK_THROWS_AS(reconstruct_from(1, row_values, 1, col_values),
                    ValidationError);
}

TEST_CASE("board text round-trip") {
    Rng rng(83, RngStream::sample, 0);
    std::vector<CellColor> bottom, left;
    for (int c = 0; c < 4; ++c) {
        bottom.push_back(rng.bernoulli(0.5) ? CellColor::red
                                            : CellColor::blue);
    }
    left.push_back(bottom[0]);
    left.push_back(CellColor::red);
    left.push_back(CellColor::blue);
    Board b = complete_from_seed(bottom, left);
    CHECK(Board::from_text(b.to_text()) == b);
    CHECK_THROWS_AS(Board::from_text("RBX\nRBB\n"), ValidationError);
    CHECK_THROWS_AS(Board::from_text("RB\nRBB\n"), ValidationError);
}
