// Copyright 2026 The Dualis Authors
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


// Independent reference computations. Nothing here calls the eigensolver.

#ifndef DUALIS_TESTS_ORACLES_HPP
#define DUALIS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dualis/opscore.hpp"

namespace oracle {

using dualis::ComplexMatrix;
using dualis::cplx;

// Number of eigenvalues of A strictly below x, by Sylvester inertia of the
// LDL^H factorization of A - xI. Tiny pivots are nudged, which only moves a
// count when x sits on an eigenvalue.
inline int count_below(const ComplexMatrix& a, double x) {
    const std::size_t n = a.rows();
    std::vector<cplx> m(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] -= x;
    int negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = m[k * n + k].real();
        if (std::abs(d) < 1e-300) d = -1e-300;
        if (d < 0) ++negatives;
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = m[i * n + k] / d;
            for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] -= l * m[k * n + j];
        }
    }
    return negatives;
}

inline std::vector<double> bisection_eigenvalues(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double r = 0;  // Gershgorin radius
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(a(i, j));
        r = std::max(r, s);
    }
    std::vector<double> out;
    for (std::size_t k = 0; k < n; ++k) {
        double lo = -r - 1, hi = r + 1;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, r); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(a, mid) > static_cast<int>(k))
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

// exp(sA) by a fixed number of Taylor terms; fine for ||sA|| well below 1.
inline ComplexMatrix taylor_expm(const ComplexMatrix& a, double s, int terms = 20) {
    const std::size_t n = a.rows();
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k < terms; ++k) {
        term = term * a;
        term *= cplx(s / k, 0);
        sum += term;
    }
    return sum;
}

// Z = sum over all spins of exp(K sum_<ij> s_i s_j) on a rows x cols torus,
// bonds to the right and below with wrap-around.
inline double brute_force_z(int rows, int cols, double k) {
    const int n = rows * cols;
    double z = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        auto s = [&](int r, int col) {
            const int idx = ((r + rows) % rows) * cols + ((col + cols) % cols);
            return ((c >> idx) & 1) ? -1 : 1;
        };
        int e = 0;
        for (int r = 0; r < rows; ++r)
            for (int col = 0; col < cols; ++col) e += s(r, col) * (s(r, col + 1) + s(r + 1, col));
        z += std::exp(k * e);
    }
    return z;
}

inline double entropy_of(std::vector<double> p) {
    double s = 0;
    for (double x : p)
        if (x > 0) s -= x * std::log(x);
    return s;
}

}  // namespace oracle

#endif
