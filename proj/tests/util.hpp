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

#ifndef COLEX_TESTS_UTIL_HPP
#define COLEX_TESTS_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "colex/colex_all.hpp"

namespace testutil {

using Dense = std::vector<std::vector<int>>;

// Textbook elimination on ints, independent of the bit-packed code.
inline std::size_t naive_rank(Dense m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r][c])
                for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

inline Dense to_dense(const colex::BinaryMatrix& m) {
    Dense d(m.n_rows(), std::vector<int>(m.n_cols()));
    for (std::size_t r = 0; r < m.n_rows(); ++r)
        for (std::size_t c = 0; c < m.n_cols(); ++c) d[r][c] = m.get(r, c);
    return d;
}

inline colex::BinaryMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    colex::BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    return m;
}

inline colex::BitVec random_vec(std::mt19937& rng, std::size_t n) {
    colex::BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

// Proper bipartition with 1 <= |A| <= min(cap, n - 1).
inline colex::Bipartition random_region(std::mt19937& rng, std::size_t n, std::size_t cap = 10) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::size_t> size(1, std::min(cap, n - 1));
    all.resize(size(rng));
    return colex::Bipartition::from_vertices(n, all);
}

}  // namespace testutil

#endif
