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

#include <array>
#include <complex>
#include <optional>
#include <string>

namespace nisqlab {

using c64 = std::complex<double>;

/// Row-major 2x2 unitary.
struct Mat2 {
    std::array<c64, 4> a{};
    c64 &operator()(int r, int c) { return a[static_cast<size_t>(2 * r + c)]; }
    const c64 &operator()(int r, int c) const {
        return a[static_cast<size_t>(2 * r + c)];
    }
    Mat2 conjugate() const;
    friend bool operator==(const Mat2 &, const Mat2 &) = default;
};

/// Row-major 4x4 unitary. For a gate on the ordered pair (a, b), the basis
/// index is 2*x_a + x_b, i.e. the first-listed qubit is the high-order bit.
struct Mat4 {
    std::array<c64, 16> a{};
    c64 &operator()(int r, int c) { return a[static_cast<size_t>(4 * r + c)]; }
    const c64 &operator()(int r, int c) const {
        return a[static_cast<size_t>(4 * r + c)];
    }
    Mat4 conjugate() const;
    bool is_diagonal(double tol = 1e-14) const;
    friend bool operator==(const Mat4 &, const Mat4 &) = default;
};

/// Max-norm of U U+ - I.
double unitarity_defect(const Mat2 &u);
double unitarity_defect(const Mat4 &u);

inline constexpr double kUnitaryTol = 1e-12;

namespace gates {

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 sqrt_x();
Mat2 sqrt_y();
/// Square root of (X + Y)/sqrt(2).
Mat2 sqrt_w();
Mat2 phase_s();
Mat2 phase_t();

Mat4 cz();
Mat4 cx(); // control = first-listed qubit
Mat4 iswap();

/// Gate tables used by the circuit file format; names are lowercase.
std::optional<Mat2> single_by_name(const std::string &name);
std::optional<Mat4> two_by_name(const std::string &name);

} // namespace gates

} // namespace nisqlab
