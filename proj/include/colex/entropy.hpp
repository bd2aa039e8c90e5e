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

#ifndef COLEX_ENTROPY_HPP
#define COLEX_ENTROPY_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "colex/colex.hpp"
#include "colex/errors.hpp"
#include "colex/gf2.hpp"
#include "colex/linalg.hpp"
#include "colex/stabilizer.hpp"

namespace colex {

enum class Method { RankFormula, CosetCounting, Oracle, Superposition };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::RankFormula: return "rank_formula";
        case Method::CosetCounting: return "coset_counting";
        case Method::Oracle: return "oracle";
        case Method::Superposition: return "superposition";
    }
    return "?";
}

struct EntropyReport {
    double s_a = 0;
    std::size_t a_size = 0;
    std::size_t boundary_size = 0;  // vertices of A with a neighbor in B
    Method method = Method::RankFormula;

    bool exact() const { return method == Method::RankFormula || method == Method::CosetCounting; }
};

struct CountingReport {
    std::size_t sigma_a = 0;
    std::size_t sigma_b = 0;
    std::size_t sigma_ab = 0;
    std::size_t m_a = 0;
    std::size_t m_b = 0;
    long log2_d_a = 0;
    long log2_d_b = 0;
};

struct DensityMatrixSmall {
    std::size_t dim = 0;
    std::vector<double> re;  // row-major
    std::vector<double> im;

    double trace() const {
        double t = 0;
        for (std::size_t i = 0; i < dim; ++i) t += re[i * dim + i];
        return t;
    }
    bool is_real() const {
        return std::all_of(im.begin(), im.end(), [](double x) { return x == 0.0; });
    }
};

inline double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw usage_error("binary_entropy argument must lie in [0, 1]");
    double h = 0;
    if (x > 0) h -= x * std::log2(x);
    if (x < 1) h -= (1 - x) * std::log2(1 - x);
    return h;
}

namespace detail {

inline void check_bipartition(const StabilizerModel& s, const Bipartition& p) {
    if (p.n() != s.n_qubits()) throw dimension_error("bipartition covers " + std::to_string(p.n()) + " vertices, lattice has " + std::to_string(s.n_qubits()));
    if (!p.proper()) throw usage_error("subsystem A must be nonempty and proper");
}

inline std::size_t boundary_size(const Colex& c, const Bipartition& p) {
    auto adj = vertex_adjacency(c);
    std::size_t n = 0;
    for (auto v : p.a.ones())
        if (std::any_of(adj[v].begin(), adj[v].end(), [&](std::size_t w) { return !p.a.get(w); })) ++n;
    return n;
}

}  // namespace detail

// S_A = rank(M|A) + rank(M|B) - rank(M), identical for every logical basis state.
inline EntropyReport entanglement_entropy(const StabilizerModel& s, const Bipartition& p) {
    detail::check_bipartition(s, p);
    auto ra = rank(restrict_columns(s.m_x, p.a));
    auto rb = rank(restrict_columns(s.m_x, p.b()));
    EntropyReport r;
    r.s_a = static_cast<double>(ra + rb - s.log2_group_order);
    r.a_size = p.a_size();
    r.boundary_size = detail::boundary_size(*s.colex, p);
    return r;
}

// Plaquette census and component counts; no entropy.
inline CountingReport counting_summary(const Colex& c, const Bipartition& p) {
    CountingReport r;
    for (const auto& f : c.faces) {
        std::size_t in_a = 0;
        for (auto v : f.cycle) in_a += p.a.get(v);
        if (in_a == f.cycle.size()) {
            ++r.sigma_a;
        } else if (in_a == 0) {
            ++r.sigma_b;
        } else {
            ++r.sigma_ab;
        }
    }
    r.m_a = components(c, p.a).size();
    r.m_b = components(c, p.b()).size();
    return r;
}

namespace detail {

// A component lifts when every cycle inside it is contractible on the torus, i.e.
// unwrapped coordinates can be assigned consistently along its edges.
inline bool component_lifts(const Colex& c, const std::vector<std::size_t>& comp, const BitVec& mask,
                            const std::vector<std::vector<std::size_t>>& adj) {
    const int R = c.period_rows, C = c.period_cols;
    std::vector<std::array<long, 2>> pos(c.vertices);
    std::vector<char> seen(c.vertices, 0);
    std::deque<std::size_t> q{comp.front()};
    seen[comp.front()] = 1;
    pos[comp.front()] = {c.coords[comp.front()][0], c.coords[comp.front()][1]};
    auto wrap = [](int d, int period) { return ((d % period) + period + 1) % period - 1; };
    while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        for (auto y : adj[x]) {
            if (!mask.get(y)) continue;
            std::array<long, 2> py{pos[x][0] + wrap(c.coords[y][0] - c.coords[x][0], R), pos[x][1] + wrap(c.coords[y][1] - c.coords[x][1], C)};
            if (!seen[y]) {
                seen[y] = 1;
                pos[y] = py;
                q.push_back(y);
            } else if (pos[y] != py) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

// Closed-string accounting. Valid when no plaquette touches two components of the same
// side and exactly one component is "exterior": on the torus the only one winding a
// handle, on the planar code the only one reaching the border. Then
//   torus:  log2 d_A = Sigma_A + 2 m_B - 2,        log2 d_B = Sigma_B + 2 m_A - 2
//   planar: log2 d_A = Sigma_A + 2 (m_B - [ext in B]), log2 d_B = Sigma_B + 2 (m_A - [ext in A])
// and S_A = log2|G| - log2 d_A - log2 d_B with |G| taken from the face count.
inline std::pair<EntropyReport, CountingReport> counting_entropy(const StabilizerModel& s, const Bipartition& p) {
    detail::check_bipartition(s, p);
    const Colex& c = *s.colex;
    if (!c.has_embedding()) throw scope_error("counting needs an embedded lattice");
    const BitVec b = p.b();
    auto ca = components(c, p.a);
    auto cb = components(c, b);

    std::vector<long> label(c.vertices, -1);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (auto v : ca[i]) label[v] = static_cast<long>(i);
    for (std::size_t i = 0; i < cb.size(); ++i)
        for (auto v : cb[i]) label[v] = static_cast<long>(ca.size() + i);
    for (const auto& f : c.faces) {
        long la = -1, lb = -1;
        for (auto v : f.cycle) {
            long& slot = p.a.get(v) ? la : lb;
            if (slot >= 0 && slot != label[v]) throw scope_error("a plaquette touches two components of one side; use the rank formula");
            slot = label[v];
        }
    }

    std::size_t exterior = 0;
    bool exterior_in_a = false;
    if (c.kind == SurfaceKind::TorusHex) {
        auto adj = vertex_adjacency(c);
        for (const auto& comp : ca)
            if (!detail::component_lifts(c, comp, p.a, adj)) {
                ++exterior;
                exterior_in_a = true;
            }
        for (const auto& comp : cb)
            if (!detail::component_lifts(c, comp, b, adj)) ++exterior;
    } else {
        auto vf = faces_of_vertex(c);
        auto on_border = [&](const std::vector<std::size_t>& comp) {
            return std::any_of(comp.begin(), comp.end(), [&](std::size_t v) { return vf[v].size() < 3; });
        };
        for (const auto& comp : ca)
            if (on_border(comp)) {
                ++exterior;
                exterior_in_a = true;
            }
        for (const auto& comp : cb)
            if (on_border(comp)) ++exterior;
    }
    if (exterior != 1) throw scope_error("region needs exactly one exterior component for counting; use the rank formula");

    CountingReport r = counting_summary(c, p);
    long log2_g = static_cast<long>(c.faces.size());
    const long ma = static_cast<long>(r.m_a), mb = static_cast<long>(r.m_b);
    if (c.kind == SurfaceKind::TorusHex) {
        log2_g -= 2;
        r.log2_d_a = static_cast<long>(r.sigma_a) + 2 * mb - 2;
        r.log2_d_b = static_cast<long>(r.sigma_b) + 2 * ma - 2;
    } else {
        r.log2_d_a = static_cast<long>(r.sigma_a) + 2 * (mb - (exterior_in_a ? 0 : 1));
        r.log2_d_b = static_cast<long>(r.sigma_b) + 2 * (ma - (exterior_in_a ? 1 : 0));
    }
    EntropyReport e;
    e.s_a = static_cast<double>(log2_g - r.log2_d_a - r.log2_d_b);
    e.a_size = p.a_size();
    e.boundary_size = detail::boundary_size(c, p);
    e.method = Method::CosetCounting;
    return {e, r};
}

namespace detail {

// Incremental GF(2) basis whose linear "tag" map vanishes on the seed vectors and sends
// each later independent vector to a fresh bit; used to coordinatize U'/H.
struct TaggedBasis {
    std::vector<BitVec> vecs;
    std::vector<std::size_t> pivots;
    std::vector<std::uint64_t> tags;
    std::size_t fresh = 0;

    std::pair<BitVec, std::uint64_t> reduce(BitVec v) const {
        std::uint64_t tag = 0;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (v.get(pivots[i])) {
                v ^= vecs[i];
                tag ^= tags[i];
            }
        return {std::move(v), tag};
    }
    void insert(const BitVec& v, bool seed) {
        auto [rest, tag] = reduce(v);
        auto piv = rest.find_next(0);
        if (piv == rest.size()) return;
        if (!seed) {
            if (fresh == 63) throw resource_error("character group too large");
            tag ^= std::uint64_t{1} << fresh++;
        }
        vecs.push_back(std::move(rest));
        pivots.push_back(piv);
        tags.push_back(seed ? 0 : tag);
    }
    std::uint64_t coordinates(const BitVec& v) const { return reduce(v).second; }
};

}  // namespace detail

// Entropy of sum_t a_t |t> for any amplitudes. With R_A = rowspace(M|A), H_A the A-parts of
// stabilizers living on A, classes = labels modulo {s : l_s|A in R_A} and D = labels whose
// logical has a representative on A alone, rho_A splits over the characters psi of
// U = (span{v(t,s)} + H_A)/H_A, v(t,s) = a(s)|A + w[t] + w[t+s], into blocks
//   N_psi[c,c'] = sum_{t in c, s in D, [t+s]=c'} a_t conj(a_{t+s}) psi(v(t,s)).
// Then S = S0 - log2|U| + H({eig(N_psi)/|U|}) with S0 the rank-formula value.
inline EntropyReport logical_superposition_entropy(const StabilizerModel& s, const LogicalState& state, const Bipartition& p) {
    detail::check_bipartition(s, p);
    const std::size_t L = s.n_logicals();
    state.check(L);
    const std::size_t Q = std::size_t{1} << L;
    const auto a_cols = p.a_vertices(), b_cols = p.b_vertices();
    const BinaryMatrix ma = restrict_columns(s.m_x, a_cols), mb = restrict_columns(s.m_x, b_cols);
    const double s0 = static_cast<double>(rank(ma) + rank(mb) - s.log2_group_order);

    auto restrict_vec = [](const BitVec& v, const std::vector<std::size_t>& cols) {
        BitVec out(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (v.get(cols[j])) out.set(j);
        return out;
    };

    detail::TaggedBasis basis;
    const BinaryMatrix left_kernel = kernel_basis(transpose(mb));
    for (const auto& y : left_kernel.rows()) basis.insert(combine_rows(ma, y), true);

    std::vector<char> in_e(Q, 0), in_d(Q, 0);
    std::vector<BitVec> rep_a(Q), l_a(Q);
    for (std::size_t t = 0; t < Q; ++t) {
        BitVec l = logical_support(s, t);
        l_a[t] = restrict_vec(l, a_cols);
        in_e[t] = in_rowspace(ma, l_a[t]);
        if (auto y = solve_left(mb, restrict_vec(l, b_cols))) {
            in_d[t] = 1;
            rep_a[t] = l_a[t] ^ combine_rows(ma, *y);
        }
    }
    std::vector<std::size_t> cls(Q), reps;
    for (std::size_t t = 0; t < Q; ++t) {
        std::size_t m = t;
        for (std::size_t e = 0; e < Q; ++e)
            if (in_e[e]) m = std::min(m, t ^ e);
        if (m == t) reps.push_back(t);
        cls[t] = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), m) - reps.begin());
    }
    const std::size_t nc = reps.size();

    struct Term {
        std::size_t t, s;
        BitVec v;
    };
    std::vector<Term> terms;
    for (std::size_t t = 0; t < Q; ++t) {
        if (state.coeffs[t] == 0.0) continue;
        for (std::size_t d = 0; d < Q; ++d) {
            if (!in_d[d] || state.coeffs[t ^ d] == 0.0) continue;
            BitVec v = rep_a[d] ^ l_a[reps[cls[t]]] ^ l_a[reps[cls[t ^ d]]];
            basis.insert(v, false);
            terms.push_back({t, d, std::move(v)});
        }
    }
    const std::size_t u = basis.fresh;
    std::vector<std::uint64_t> coord;
    for (const auto& term : terms) coord.push_back(basis.coordinates(term.v));

    std::vector<double> probs;
    const double scale = std::ldexp(1.0, -static_cast<int>(u));
    for (std::uint64_t psi = 0; psi < (std::uint64_t{1} << u); ++psi) {
        std::vector<double> re(nc * nc, 0.0), im(nc * nc, 0.0);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto& term = terms[i];
            std::complex<double> z = state.coeffs[term.t] * std::conj(state.coeffs[term.t ^ term.s]);
            if (std::popcount(psi & coord[i]) & 1) z = -z;
            const std::size_t at = cls[term.t] * nc + cls[term.t ^ term.s];
            re[at] += z.real();
            im[at] += z.imag();
        }
        for (double mu : hermitian_eigenvalues(re, im, nc)) probs.push_back(mu * scale);
    }
    EntropyReport r;
    r.s_a = s0 - static_cast<double>(u) + shannon_bits(probs);
    r.a_size = p.a_size();
    r.boundary_size = detail::boundary_size(*s.colex, p);
    r.method = Method::Superposition;
    return r;
}

// Dense rho_A from the computational-basis expansion of the state: every codeword
// x in l_t + rowspace(M) carries a_t / sqrt|G|, then B is traced out.
inline DensityMatrixSmall reduced_density_small(const StabilizerModel& s, const LogicalState& state, const Bipartition& p,
                                                std::size_t max_qubits = 10) {
    detail::check_bipartition(s, p);
    state.check(s.n_logicals());
    const auto a_cols = p.a_vertices();
    if (a_cols.size() > max_qubits) throw resource_error("|A| = " + std::to_string(a_cols.size()) + " exceeds " + std::to_string(max_qubits));
    if (s.log2_group_order + s.n_logicals() > 22) throw resource_error("codeword enumeration bound exceeded (rank + L > 22)");
    if (s.n_qubits() > 64) throw resource_error("dense oracle supports at most 64 qubits");

    auto to_word = [](const BitVec& v) { return v.size() ? v.data()[0] : std::uint64_t{0}; };
    auto rr = row_reduce(s.m_x);
    std::vector<std::uint64_t> gens;
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) gens.push_back(to_word(rr.reduced.row(i)));
    const std::uint64_t mask_b = to_word(p.b());
    const double norm = std::sqrt(std::ldexp(1.0, -static_cast<int>(gens.size())));

    struct Entry {
        std::uint64_t key_b;
        std::uint32_t idx_a;
        std::complex<double> amp;
    };
    std::vector<Entry> entries;
    for (std::size_t t = 0; t < state.coeffs.size(); ++t) {
        if (state.coeffs[t] == 0.0) continue;
        std::uint64_t x = to_word(logical_support(s, t));
        const auto amp = state.coeffs[t] * norm;
        for (std::uint64_t i = 0;; ++i) {
            std::uint32_t ia = 0;
            for (std::size_t j = 0; j < a_cols.size(); ++j) ia |= static_cast<std::uint32_t>(x >> a_cols[j] & 1u) << j;
            entries.push_back({x & mask_b, ia, amp});
            if (i + 1 == (std::uint64_t{1} << gens.size())) break;
            x ^= gens[std::countr_zero(i + 1)];  // Gray code step
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.key_b < y.key_b; });

    DensityMatrixSmall rho;
    rho.dim = std::size_t{1} << a_cols.size();
    rho.re.assign(rho.dim * rho.dim, 0.0);
    rho.im.assign(rho.dim * rho.dim, 0.0);
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo;
        while (hi < entries.size() && entries[hi].key_b == entries[lo].key_b) ++hi;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j) {
                auto z = entries[i].amp * std::conj(entries[j].amp);
                rho.re[entries[i].idx_a * rho.dim + entries[j].idx_a] += z.real();
                rho.im[entries[i].idx_a * rho.dim + entries[j].idx_a] += z.imag();
            }
        lo = hi;
    }
    return rho;
}

// rho_A of a logical basis state straight from the stabilizer structure:
// rho[x][y] = [x in l_t|A + R_A] [x + y in H_A] / |R_A|. Scales to any lattice size.
inline DensityMatrixSmall stabilizer_density(const StabilizerModel& s, std::size_t label, const Bipartition& p, std::size_t max_qubits = 10) {
    detail::check_bipartition(s, p);
    const auto a_cols = p.a_vertices(), b_cols = p.b_vertices();
    if (a_cols.size() > max_qubits) throw resource_error("|A| exceeds the dense bound");
    const BinaryMatrix ma = restrict_columns(s.m_x, a_cols), mb = restrict_columns(s.m_x, b_cols);
    auto word = [](const BitVec& v) {
        std::uint64_t w = 0;
        for (auto i : v.ones()) w |= std::uint64_t{1} << i;
        return w;
    };
    auto span = [&](const std::vector<BitVec>& rows) {
        std::vector<std::uint64_t> out{0};
        auto rr = row_reduce(BinaryMatrix::from_rows(a_cols.size(), rows));
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
            auto g = word(rr.reduced.row(i));
            for (std::size_t j = 0, n = out.size(); j < n; ++j) out.push_back(out[j] ^ g);
        }
        return out;
    };
    auto r_a = span(ma.rows());
    std::vector<BitVec> h_rows;
    const BinaryMatrix left_kernel = kernel_basis(transpose(mb));
    for (const auto& y : left_kernel.rows()) h_rows.push_back(combine_rows(ma, y));
    auto h_a = span(h_rows);
    const BitVec l = logical_support(s, label);
    std::uint64_t shift = 0;
    for (std::size_t j = 0; j < a_cols.size(); ++j)
        if (l.get(a_cols[j])) shift |= std::uint64_t{1} << j;

    DensityMatrixSmall rho;
    rho.dim = std::size_t{1} << a_cols.size();
    rho.re.assign(rho.dim * rho.dim, 0.0);
    rho.im.assign(rho.dim * rho.dim, 0.0);
    const double w = 1.0 / static_cast<double>(r_a.size());
    for (auto r : r_a)
        for (auto h : h_a) rho.re[(r ^ shift) * rho.dim + (r ^ shift ^ h)] = w;
    return rho;
}

// Spectrum of rho, diagonalizing each block of the sparsity pattern separately.
inline std::vector<double> density_spectrum(const DensityMatrixSmall& rho) {
    const std::size_t n = rho.dim;
    auto nz = [&](std::size_t i, std::size_t j) { return std::abs(rho.re[i * n + j]) > 1e-15 || std::abs(rho.im[i * n + j]) > 1e-15; };
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nz(i, j)) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i)
        if (nz(i, i)) blocks[find(i)].push_back(i);
    std::vector<double> eig;
    for (const auto& blk : blocks) {
        if (blk.empty()) continue;
        const std::size_t m = blk.size();
        std::vector<double> re(m * m), im(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                re[i * m + j] = rho.re[blk[i] * n + blk[j]];
                im[i * m + j] = rho.im[blk[i] * n + blk[j]];
            }
        for (double x : hermitian_eigenvalues(re, im, m)) eig.push_back(x);
    }
    return eig;
}

inline EntropyReport oracle_entropy(const StabilizerModel& s, const LogicalState& state, const Bipartition& p, std::size_t max_qubits = 10) {
    auto rho = reduced_density_small(s, state, p, max_qubits);
    EntropyReport r;
    r.s_a = shannon_bits(density_spectrum(rho));
    r.a_size = p.a_size();
    r.boundary_size = detail::boundary_size(*s.colex, p);
    r.method = Method::Oracle;
    return r;
}

// Wootters concurrence of a real two-qubit density matrix.
inline double concurrence_two_qubit(const DensityMatrixSmall& rho) {
    if (rho.dim != 4) throw usage_error("concurrence needs a 4x4 density matrix");
    if (!rho.is_real()) throw usage_error("concurrence is implemented for real density matrices");
    static constexpr double yy[16] = {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0};
    auto mul = [](const std::vector<double>& x, const std::vector<double>& y) {
        std::vector<double> z(16, 0.0);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                for (int j = 0; j < 4; ++j) z[i * 4 + j] += x[i * 4 + k] * y[k * 4 + j];
        return z;
    };
    const std::vector<double> flip(yy, yy + 16);
    auto tilde = mul(mul(flip, rho.re), flip);
    auto e = symmetric_eigen(rho.re, 4, true);
    std::vector<double> root(16, 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) root[i * 4 + j] += e.vectors[i * 4 + k] * std::sqrt(std::max(0.0, e.values[k])) * e.vectors[j * 4 + k];
    auto h = mul(mul(root, tilde), root);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) h[i * 4 + j] = h[j * 4 + i] = 0.5 * (h[i * 4 + j] + h[j * 4 + i]);
    auto mu = symmetric_eigen(h, 4).values;
    std::vector<double> l;
    for (double x : mu) l.push_back(std::sqrt(std::max(0.0, x)));
    std::sort(l.rbegin(), l.rend());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace colex

#endif
