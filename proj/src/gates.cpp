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

#include "nisqlab/gates.hpp"

#include <cmath>

namespace nisqlab {

Mat2 Mat2::conjugate() const {
    Mat2 c;
    for (size_t i = 0; i < a.size(); ++i) {
        c.a[i] = std::conj(a[i]);
    }
    return c;
}

Mat4 Mat4::conjugate() const {
    Mat4 c;
    for (size_t i = 0; i < a.size(); ++i) {
        c.a[i] = std::conj(a[i]);
    }
    return c;
}

bool Mat4::is_diagonal(double tol) const {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (r != c && std::abs((*this)(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

namespace {

template <typename Mat, int Dim> double defect(const Mat &u) {
    double worst = 0.0;
    for (int r = 0; r < Dim; ++r) {
        for (int c = 0; c < Dim; ++c) {
            c64 dot = 0.0;
            for (int k = 0; k < Dim; ++k) {
                dot += u(r, k) * std::conj(u(c, k));
            }
            if (r == c) {
                dot -= 1.0;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

} // namespace

double unitarity_defect(const Mat2 &u) { return defect<Mat2, 2>(u); }
double unitarity_defect(const Mat4 &u) { return defect<Mat4, 4>(u); }

namespace gates {

namespace {
const c64 kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

namespace {
Mat2 make2(c64 m00, c64 m01, c64 m10, c64 m11) {
    Mat2 m;
    m(0, 0) = m00;
    m(0, 1) = m01;
    m(1, 0) = m10;
    m(1, 1) = m11;
    return m;
}
} // namespace

Mat2 identity2() { return make2(1.0, 0.0, 0.0, 1.0); }

Mat2 pauli_x() { return make2(0.0, 1.0, 1.0, 0.0); }

Mat2 pauli_y() { return make2(0.0, -kI, kI, 0.0); }

Mat2 pauli_z() { return make2(1.0, 0.0, 0.0, -1.0); }

Mat2 hadamard() {
    return make2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
}

// For a Hermitian unitary H, sqrt(H) = (1+i)/2 I + (1-i)/2 H.
namespace {
Mat2 hermitian_sqrt(const Mat2 &h) {
    const c64 s{0.5, 0.5};
    const c64 t{0.5, -0.5};
    Mat2 r = identity2();
    for (size_t i = 0; i < r.a.size(); ++i) {
        r.a[i] = s * r.a[i] + t * h.a[i];
    }
    return r;
}
} // namespace

Mat2 sqrt_x() { return hermitian_sqrt(pauli_x()); }

Mat2 sqrt_y() { return hermitian_sqrt(pauli_y()); }

Mat2 sqrt_w() {
    Mat2 w;
    const Mat2 x = pauli_x();
    const Mat2 y = pauli_y();
    for (size_t i = 0; i < w.a.size(); ++i) {
        w.a[i] = (x.a[i] + y.a[i]) * kInvSqrt2;
    }
    return hermitian_sqrt(w);
}

Mat2 phase_s() { return make2(1.0, 0.0, 0.0, kI); }

Mat2 phase_t() {
    return make2(1.0, 0.0, 0.0, c64{kInvSqrt2, kInvSqrt2});
}

Mat4 cz() {
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    m(3, 3) = -1.0;
    return m;
}

Mat4 cx() {
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

Mat4 iswap() {
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 2) = kI;
    m(2, 1) = kI;
    m(3, 3) = 1.0;
    return m;
}

std::optional<Mat2> single_by_name(const std::string &name) {
    if (name == "i" || name == "id") {
        return identity2();
    }
    if (name == "x") {
        return pauli_x();
    }
    if (name == "y") {
        return pauli_y();
    }
    if (name == "z") {
        return pauli_z();
    }
    if (name == "h") {
        return hadamard();
    }
    if (name == "sx") {
        return sqrt_x();
    }
    if (name == "sy") {
        return sqrt_y();
    }
    if (name == "sw") {
        return sqrt_w();
    }
    if (name == "s") {
        return phase_s();
    }
    if (name == "t") {
        return phase_t();
    }
    return std::nullopt;
}

std::optional<Mat4> two_by_name(const std::string &name) {
    if (name == "cz") {
        return cz();
    }
    if (name == "cx" || name == "cnot") {
        return cx();
    }
    if (name == "iswap") {
        return iswap();
    }
    return std::nullopt;
}

} // namespace gates

} // namespace nisqlab
