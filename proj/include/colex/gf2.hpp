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

#ifndef COLEX_GF2_HPP
#define COLEX_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colex/errors.hpp"

namespace colex {

// Fixed-length bit vector packed into 64-bit words. Storage past size() is kept zero.
class BitVec {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + word_bits - 1) / word_bits, 0) {}

    template <typename Range>
    static BitVec from_indices(std::size_t n, const Range& idx) {
        BitVec v(n);
        for (auto i : idx) {
            if (static_cast<std::size_t>(i) >= n) {
                throw dimension_error("bit index " + std::to_string(i) + " out of range " + std::to_string(n));
            }
            v.set(static_cast<std::size_t>(i));
        }
        return v;
    }
    static BitVec from_indices(std::size_t n, std::initializer_list<std::size_t> idx) {
        return from_indices<std::initializer_list<std::size_t>>(n, idx);
    }
    // "1011" -> bits 0, 2, 3 set.
    static BitVec from_string(const std::string& s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                v.set(i);
            } else if (s[i] != '0') {
                throw usage_error("bit string may only contain 0 and 1");
            }
        }
        return v;
    }

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return words_.size(); }
    const word_t* data() const { return words_.data(); }
    word_t* data() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool value = true) {
        word_t m = word_t{1} << (i % word_bits);
        if (value) {
            words_[i / word_bits] |= m;
        } else {
            words_[i / word_bits] &= ~m;
        }
    }
    void flip(std::size_t i) { words_[i / word_bits] ^= word_t{1} << (i % word_bits); }

    BitVec& operator^=(const BitVec& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    BitVec complement() const {
        BitVec r(n_);
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
        r.clear_tail();
        return r;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
    }
    bool none() const { return !any(); }

    std::size_t overlap(const BitVec& o) const {
        check_same(o);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
        return c;
    }
    // Parity of the overlap; commutation test for X- and Z-type supports.
    bool dot(const BitVec& o) const { return overlap(o) & 1u; }

    // Index of the first set bit at or after `from`, or size() if there is none.
    std::size_t find_next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t w = from / word_bits;
        word_t cur = words_[w] & (~word_t{0} << (from % word_bits));
        while (true) {
            if (cur) return std::min(n_, w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
            if (++w == words_.size()) return n_;
            cur = words_[w];
        }
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = find_next(0); i < n_; i = find_next(i + 1)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitVec& o) const = default;
    // Lexicographic on the bit string read from index 0.
    bool lex_less(const BitVec& o) const {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_t d = words_[w] ^ o.words_[w];
            if (d) return o.words_[w] >> std::countr_zero(d) & 1u;
        }
        return false;
    }

   private:
    void check_same(const BitVec& o) const {
        if (o.n_ != n_) {
            throw dimension_error("bit vector length mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
        }
    }
    void clear_tail() {
        if (n_ % word_bits && !words_.empty()) words_.back() &= (word_t{1} << (n_ % word_bits)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<word_t> words_;
};

class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t n_rows, std::size_t n_cols) : n_cols_(n_cols), rows_(n_rows, BitVec(n_cols)) {}

    static BinaryMatrix identity(std::size_t n) {
        BinaryMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }
    static BinaryMatrix from_rows(std::size_t n_cols, std::vector<BitVec> rows) {
        BinaryMatrix m(0, n_cols);
        for (auto& r : rows) m.append_row(std::move(r));
        return m;
    }
    static BinaryMatrix from_dense(const std::vector<std::vector<int>>& rows, std::size_t n_cols = 0) {
        if (!rows.empty()) n_cols = rows.front().size();
        BinaryMatrix m(rows.size(), n_cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != n_cols) throw dimension_error("ragged dense matrix");
            for (std::size_t c = 0; c < n_cols; ++c) m.set(r, c, rows[r][c] & 1);
        }
        return m;
    }

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return n_cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return rows_[r]; }
    const std::vector<BitVec>& rows() const { return rows_; }

    void set_row(std::size_t r, BitVec v) {
        if (v.size() != n_cols_) throw dimension_error("row length mismatch");
        rows_[r] = std::move(v);
    }
    void append_row(BitVec v) {
        if (v.size() != n_cols_) throw dimension_error("row length mismatch");
        rows_.push_back(std::move(v));
    }
    void xor_row(std::size_t dst, std::size_t src) { rows_[dst] ^= rows_[src]; }
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

    bool operator==(const BinaryMatrix& o) const = default;

   private:
    std::size_t n_cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RowReduction {
    BinaryMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

namespace detail {

// In-place RREF. Pivots are taken column by column in ascending order, the first
// row at or below the current rank holding a one becomes the pivot row. Optional
// `track` rows receive the same operations (used to recover combinations).
inline std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t n_cols, std::vector<BitVec>* track = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        if (track) std::swap((*track)[r], (*track)[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                if (track) (*track)[i] ^= (*track)[r];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const BinaryMatrix& m) {
    std::vector<BitVec> rows = m.rows();
    return detail::eliminate(rows, m.n_cols()).size();
}

inline RowReduction row_reduce(const BinaryMatrix& m) {
    std::vector<BitVec> rows = m.rows();
    auto pivots = detail::eliminate(rows, m.n_cols());
    return {BinaryMatrix::from_rows(m.n_cols(), std::move(rows)), std::move(pivots)};
}

inline bool in_rowspace(const BinaryMatrix& m, const BitVec& v) {
    if (v.size() != m.n_cols()) {
        throw dimension_error("vector length " + std::to_string(v.size()) + " != matrix columns " + std::to_string(m.n_cols()));
    }
    auto rr = row_reduce(m);
    BitVec w = v;
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        if (w.get(rr.pivot_columns[i])) w ^= rr.reduced.row(i);
    return w.none();
}

inline BinaryMatrix kernel_basis(const BinaryMatrix& m) {
    auto rr = row_reduce(m);
    const std::size_t n = m.n_cols();
    std::vector<char> is_pivot(n, 0);
    for (auto p : rr.pivot_columns) is_pivot[p] = 1;
    BinaryMatrix out(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(n);
        v.set(f);
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
            if (rr.reduced.get(i, f)) v.set(rr.pivot_columns[i]);
        out.append_row(std::move(v));
    }
    return out;
}

inline BinaryMatrix restrict_columns(const BinaryMatrix& m, std::vector<std::size_t> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && keep.back() >= m.n_cols()) {
        throw dimension_error("column " + std::to_string(keep.back()) + " out of range " + std::to_string(m.n_cols()));
    }
    BinaryMatrix out(m.n_rows(), keep.size());
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        const BitVec& src = m.row(r);
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (src.get(keep[j])) out.set(r, j);
    }
    return out;
}

inline BinaryMatrix restrict_columns(const BinaryMatrix& m, const BitVec& keep_mask) {
    if (keep_mask.size() != m.n_cols()) throw dimension_error("column mask length mismatch");
    return restrict_columns(m, keep_mask.ones());
}

inline BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.n_cols(), m.n_rows());
    for (std::size_t r = 0; r < m.n_rows(); ++r)
        for (auto c : m.row(r).ones()) t.set(c, r);
    return t;
}

// Coefficients y with y·m = v, or nullopt when v is outside the row space.
inline std::optional<BitVec> solve_left(const BinaryMatrix& m, const BitVec& v) {
    if (v.size() != m.n_cols()) throw dimension_error("vector length mismatch in solve_left");
    std::vector<BitVec> rows = m.rows();
    std::vector<BitVec> track;
    track.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) track.push_back(BitVec::from_indices(rows.size(), {i}));
    auto pivots = detail::eliminate(rows, m.n_cols(), &track);
    BitVec w = v;
    BitVec y(m.n_rows());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (w.get(pivots[i])) {
            w ^= rows[i];
            y ^= track[i];
        }
    }
    if (w.any()) return std::nullopt;
    return y;
}

// y·m for a coefficient vector y over the rows.
inline BitVec combine_rows(const BinaryMatrix& m, const BitVec& y) {
    if (y.size() != m.n_rows()) throw dimension_error("coefficient length mismatch");
    BitVec out(m.n_cols());
    for (auto i : y.ones()) out ^= m.row(i);
    return out;
}

}  // namespace colex

#endif
