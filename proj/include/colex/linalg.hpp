// Copyright 2026 The colex-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLEX_LINALG_HPP
#define COLEX_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace colex {

struct SymmetricEigen {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major n x n, column j pairs with values[j]
};

// Cyclic Jacobi on a dense row-major symmetric matrix. Sweeps until the
// off-diagonal Frobenius norm drops below `tol`.
inline SymmetricEigen symmetric_eigen(std::vector<double> a, std::size_t n, bool want_vectors = false, double tol = 1e-12,
                                      int max_sweeps = 100) {
    std::vector<double> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
        if (std::sqrt(off) < tol) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = std::abs(theta) > 1e150 ? 0.5 / theta : 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1));
                if (theta < 0 && std::abs(theta) <= 1e150) t = -t;
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v[k * n + p], vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
    SymmetricEigen out;
    for (auto i : idx) out.values.push_back(at(i, i));
    if (want_vectors) {
        out.vectors.assign(n * n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + j] = v[k * n + idx[j]];
    }
    return out;
}

// Eigenvalues of the Hermitian matrix re + i*im through the real embedding
// [[re, -im], [im, re]], whose spectrum is the original one doubled.
inline std::vector<double> hermitian_eigenvalues(const std::vector<double>& re, const std::vector<double>& im, std::size_t n) {
    bool real = std::all_of(im.begin(), im.end(), [](double x) { return x == 0.0; });
    if (real) return symmetric_eigen(re, n).values;
    const std::size_t m = 2 * n;
    std::vector<double> big(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            big[i * m + j] = re[i * n + j];
            big[(i + n) * m + j + n] = re[i * n + j];
            big[(i + n) * m + j] = im[i * n + j];
            big[i * m + j + n] = -im[i * n + j];
        }
    auto all = symmetric_eigen(std::move(big), m).values;
    std::vector<double> out;
    for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
    return out;
}

// -sum p log2 p over entries above the cutoff.
inline double shannon_bits(const std::vector<double>& p, double cutoff = 1e-12) {
    double h = 0;
    for (double x : p)
        if (x > cutoff) h -= x * std::log2(x);
    return h;
}

}  // namespace colex

#endif
