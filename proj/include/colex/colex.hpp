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

#ifndef COLEX_COLEX_HPP
#define COLEX_COLEX_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colex/errors.hpp"
#include "colex/gf2.hpp"

namespace colex {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline const char* color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        case Color::Blue: return "blue";
    }
    return "?";
}

inline Color parse_color(const std::string& s) {
    if (s == "red" || s == "r") return Color::Red;
    if (s == "green" || s == "g") return Color::Green;
    if (s == "blue" || s == "b") return Color::Blue;
    throw usage_error("unknown color '" + s + "'");
}

inline Color color_from_index(int i) { return static_cast<Color>(((i % 3) + 3) % 3); }
inline int color_index(Color c) { return static_cast<int>(c); }

enum class SurfaceKind { TorusHex, TriangularPlanar };

inline const char* kind_name(SurfaceKind k) { return k == SurfaceKind::TorusHex ? "torus" : "triangular"; }

inline SurfaceKind parse_kind(const std::string& s) {
    if (s == "torus" || s == "TorusHex") return SurfaceKind::TorusHex;
    if (s == "triangular" || s == "TriangularPlanar") return SurfaceKind::TriangularPlanar;
    throw usage_error("unknown lattice kind '" + s + "'");
}

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    Color color = Color::Red;
    bool operator==(const Edge&) const = default;
};

struct Face {
    // Counter-clockwise. Truncated border faces of the planar code are open paths.
    std::vector<std::size_t> cycle;
    Color color = Color::Red;
    bool operator==(const Face&) const = default;
};

struct Colex {
    SurfaceKind kind = SurfaceKind::TorusHex;
    std::size_t k = 0;
    std::size_t genus = 0;
    std::size_t vertices = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    // Grid embedding used by region builders. Torus: (row, col) with periods
    // (4k, 6k). Triangular: (x, y) on the triangular grid.
    std::vector<std::array<int, 2>> coords;
    int period_rows = 0;
    int period_cols = 0;

    bool has_embedding() const { return coords.size() == vertices; }
};

// Subsystem A as a vertex mask; B is the complement.
struct Bipartition {
    BitVec a;

    Bipartition() = default;
    explicit Bipartition(BitVec mask) : a(std::move(mask)) {}
    template <typename Range>
    static Bipartition from_vertices(std::size_t n, const Range& vs) {
        return Bipartition(BitVec::from_indices(n, vs));
    }

    std::size_t n() const { return a.size(); }
    std::size_t a_size() const { return a.count(); }
    BitVec b() const { return a.complement(); }
    std::vector<std::size_t> a_vertices() const { return a.ones(); }
    std::vector<std::size_t> b_vertices() const { return b().ones(); }
    bool proper() const {
        auto c = a.count();
        return c > 0 && c < a.size();
    }
};

struct ValidationFailure {
    std::string rule;
    std::vector<std::size_t> ids;
};

struct ValidationReport {
    bool passed = true;
    std::vector<ValidationFailure> failures;

    bool has(const std::string& rule) const {
        return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.rule == rule; });
    }
};

// ---------------------------------------------------------------------------
// Incidence helpers.

inline std::vector<std::vector<std::size_t>> vertex_adjacency(const Colex& c) {
    std::vector<std::vector<std::size_t>> adj(c.vertices);
    for (const auto& e : c.edges) {
        if (e.u >= c.vertices || e.v >= c.vertices) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

inline std::vector<std::vector<std::size_t>> faces_of_vertex(const Colex& c) {
    std::vector<std::vector<std::size_t>> out(c.vertices);
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        for (auto v : c.faces[f].cycle)
            if (v < c.vertices) out[v].push_back(f);
    return out;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> edge_key(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

// Sides of a face: consecutive cycle pairs, plus the closing pair when the face is a full hexagon.
inline std::vector<std::pair<std::size_t, std::size_t>> face_sides(const Face& f, bool closed) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = f.cycle.size();
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(edge_key(f.cycle[i], f.cycle[i + 1]));
    if (closed && n > 2) out.push_back(edge_key(f.cycle[n - 1], f.cycle[0]));
    return out;
}

inline bool face_closed(const Colex& c, const Face& f) { return c.kind == SurfaceKind::TorusHex || f.cycle.size() == 6; }

}  // namespace detail

// Faces sharing a side, computed from face cycles alone.
inline std::vector<std::vector<std::size_t>> face_adjacency(const Colex& c) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_side;
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        for (auto s : detail::face_sides(c.faces[f], detail::face_closed(c, c.faces[f]))) by_side[s].push_back(f);
    std::vector<std::set<std::size_t>> adj(c.faces.size());
    for (const auto& [side, fs] : by_side)
        for (auto a : fs)
            for (auto b : fs)
                if (a != b) adj[a].insert(b);
    std::vector<std::vector<std::size_t>> out;
    for (auto& s : adj) out.emplace_back(s.begin(), s.end());
    return out;
}

inline BinaryMatrix face_matrix(const Colex& c) {
    BinaryMatrix m(c.faces.size(), c.vertices);
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        for (auto v : c.faces[f].cycle) m.set(f, v);
    return m;
}

// Connected components of the subgraph induced by `mask`, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> components(const Colex& c, const BitVec& mask) {
    auto adj = vertex_adjacency(c);
    std::vector<char> seen(c.vertices, 0);
    std::vector<std::vector<std::size_t>> out;
    for (auto s : mask.ones()) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : adj[comp[i]])
                if (mask.get(w) && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Planar embedding coordinates of a vertex (brick-wall units on the torus).
inline std::array<double, 2> position(const Colex& c, std::size_t v) {
    const auto [a, b] = c.coords.at(v);
    if (c.kind == SurfaceKind::TorusHex) return {static_cast<double>(b), static_cast<double>(a)};
    return {a + b / 2.0, b * std::sqrt(3.0) / 2.0};
}

// Hop distance in the face graph from `center`; unreachable faces get SIZE_MAX.
inline std::vector<std::size_t> face_distances(const Colex& c, std::size_t center) {
    auto adj = face_adjacency(c);
    std::vector<std::size_t> d(c.faces.size(), SIZE_MAX);
    std::deque<std::size_t> q{center};
    d[center] = 0;
    while (!q.empty()) {
        auto f = q.front();
        q.pop_front();
        for (auto g : adj[f])
            if (d[g] == SIZE_MAX) {
                d[g] = d[f] + 1;
                q.push_back(g);
            }
    }
    return d;
}

// Vertices of every face within face distance `radius` of `center`.
inline BitVec disk_vertices(const Colex& c, std::size_t center, std::size_t radius) {
    auto d = face_distances(c, center);
    BitVec out(c.vertices);
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        if (d[f] <= radius)
            for (auto v : c.faces[f].cycle) out.set(v);
    return out;
}

// ---------------------------------------------------------------------------
// Builders.

inline Colex build_torus_colex(std::size_t k) {
    if (k < 1) throw usage_error("k must be ≥ 1");
    Colex c;
    c.kind = SurfaceKind::TorusHex;
    c.k = k;
    c.genus = 1;
    const int R = static_cast<int>(4 * k), C = static_cast<int>(6 * k);
    c.period_rows = R;
    c.period_cols = C;
    c.vertices = static_cast<std::size_t>(R * C);
    auto vid = [&](int r, int col) { return static_cast<std::size_t>(((r % R + R) % R) * C + (col % C + C) % C); };
    c.coords.resize(c.vertices);
    for (int r = 0; r < R; ++r)
        for (int col = 0; col < C; ++col) c.coords[vid(r, col)] = {r, col};
    for (int r = 0; r < R; ++r) {
        for (int col = 0; col < C; ++col) {
            c.edges.push_back({vid(r, col), vid(r, col + 1), color_from_index(col + 1)});
            if ((r + col) % 2 == 0) c.edges.push_back({vid(r, col), vid(r + 1, col), color_from_index(col - 1)});
        }
    }
    // Face between rows r and r+1 whose top-left corner sits at column col, col = r (mod 2).
    for (int r = 0; r < R; ++r)
        for (int col = r % 2; col < C; col += 2)
            c.faces.push_back({{vid(r, col), vid(r, col + 1), vid(r, col + 2), vid(r + 1, col + 2), vid(r + 1, col + 1), vid(r + 1, col)},
                               color_from_index(col)});
    return c;
}

namespace detail {

struct TriGrid {
    int n;
    bool inside(int x, int y) const { return y >= 0 && x >= 0 && x + y <= n - 1; }
    static bool is_face(int x, int y) { return ((x + 2 * y) % 3 + 3) % 3 == 2; }
};

// Counter-clockwise neighbor offsets on the triangular grid.
inline constexpr std::array<std::array<int, 2>, 6> tri_dirs{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

}  // namespace detail

// Planar code cut from the triangular grid: every third grid point (x + 2y = 2 mod 3)
// is a face, the rest are qubits. Border faces are truncated hexagons.
inline Colex build_triangular_colex(std::size_t k) {
    if (k < 1) throw usage_error("k must be ≥ 1");
    Colex c;
    c.kind = SurfaceKind::TriangularPlanar;
    c.k = k;
    c.genus = 0;
    const detail::TriGrid g{static_cast<int>(3 * k + 1)};
    std::map<std::pair<int, int>, std::size_t> vid;
    for (int y = 0; y < g.n; ++y)
        for (int x = 0; x + y < g.n; ++x)
            if (!g.is_face(x, y)) {
                vid[{x, y}] = c.coords.size();
                c.coords.push_back({x, y});
            }
    c.vertices = c.coords.size();
    auto face_color = [](int y) { return color_from_index(y); };
    for (int y = 0; y < g.n; ++y) {
        for (int x = 0; x + y < g.n; ++x) {
            if (!g.is_face(x, y)) continue;
            std::array<bool, 6> in{};
            for (int d = 0; d < 6; ++d) in[d] = g.inside(x + detail::tri_dirs[d][0], y + detail::tri_dirs[d][1]);
            int start = 0;
            for (int d = 0; d < 6; ++d)
                if (!in[(d + 5) % 6] && in[d]) start = d;
            Face f;
            f.color = face_color(y);
            for (int i = 0; i < 6; ++i) {
                int d = (start + i) % 6;
                if (in[d]) f.cycle.push_back(vid.at({x + detail::tri_dirs[d][0], y + detail::tri_dirs[d][1]}));
            }
            c.faces.push_back(std::move(f));
        }
    }
    for (const auto& [p, v] : vid) {
        auto [x, y] = p;
        for (int d = 0; d < 3; ++d) {
            int x2 = x + detail::tri_dirs[d][0], y2 = y + detail::tri_dirs[d][1];
            if (!g.inside(x2, y2) || g.is_face(x2, y2)) continue;
            // The two grid points adjacent to both ends are faces; the edge takes the third color.
            int cs = 0;
            for (const auto& a : detail::tri_dirs) {
                int fx = x + a[0], fy = y + a[1];
                for (const auto& b : detail::tri_dirs)
                    if (fx == x2 + b[0] && fy == y2 + b[1]) cs += color_index(face_color(fy));
            }
            c.edges.push_back({v, vid.at({x2, y2}), color_from_index(3 - cs)});
        }
    }
    std::sort(c.edges.begin(), c.edges.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return c;
}

inline Colex build_colex(SurfaceKind kind, std::size_t k) {
    return kind == SurfaceKind::TorusHex ? build_torus_colex(k) : build_triangular_colex(k);
}

// ---------------------------------------------------------------------------
// Validation.

inline ValidationReport validate_colex(const Colex& c) {
    ValidationReport rep;
    auto fail = [&](std::string rule, std::vector<std::size_t> ids) { rep.failures.push_back({std::move(rule), std::move(ids)}); };
    const bool torus = c.kind == SurfaceKind::TorusHex;

    for (std::size_t i = 0; i < c.edges.size(); ++i)
        if (c.edges[i].u >= c.vertices || c.edges[i].v >= c.vertices || c.edges[i].u == c.edges[i].v) fail("vertex range", {i});
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        for (auto v : c.faces[f].cycle)
            if (v >= c.vertices) fail("vertex range", {f});
    if (!rep.failures.empty()) {
        rep.passed = false;
        return rep;
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    for (std::size_t i = 0; i < c.edges.size(); ++i)
        if (!edge_index.emplace(detail::edge_key(c.edges[i].u, c.edges[i].v), i).second) fail("duplicate edge", {i});

    auto adj = vertex_adjacency(c);
    auto vf = faces_of_vertex(c);
    for (std::size_t v = 0; v < c.vertices; ++v) {
        bool ok = torus ? adj[v].size() == 3 : adj[v].size() <= 3 && adj[v].size() == vf[v].size();
        if (!ok) fail("3-valency", {v});
        std::array<int, 3> per{};
        for (auto f : vf[v]) ++per[color_index(c.faces[f].color)];
        bool one_each = torus || vf[v].size() == 3 ? per == std::array<int, 3>{1, 1, 1}
                                                   : std::all_of(per.begin(), per.end(), [](int x) { return x <= 1; });
        if (!one_each) fail("face per color", {v});
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> side_faces;
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        for (auto s : detail::face_sides(c.faces[f], detail::face_closed(c, c.faces[f]))) {
            side_faces[s].push_back(f);
            if (!edge_index.count(s)) fail("face cycle", {f, s.first, s.second});
        }
    }
    for (const auto& [s, fs] : side_faces) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j)
                if (c.faces[fs[i]].color == c.faces[fs[j]].color) fail("same-color adjacency", {fs[i], fs[j]});
        auto it = edge_index.find(s);
        if (it == edge_index.end()) continue;
        const Edge& e = c.edges[it->second];
        bool ok = true;
        if (fs.size() == 2) {
            ok = color_index(e.color) == 3 - color_index(c.faces[fs[0]].color) - color_index(c.faces[fs[1]].color) &&
                 c.faces[fs[0]].color != c.faces[fs[1]].color;
        } else if (fs.size() == 1) {
            ok = !torus && e.color != c.faces[fs[0]].color;
        } else {
            ok = false;
        }
        if (!ok) fail("edge color", {it->second});
    }
    for (const auto& [s, i] : edge_index)
        if (!side_faces.count(s)) fail("face cycle", {i});

    const std::size_t k = c.k;
    std::array<std::size_t, 3> per_color{};
    for (const auto& f : c.faces) ++per_color[color_index(f.color)];
    if (torus) {
        if (c.faces.size() != 12 * k * k || c.vertices != 24 * k * k || c.edges.size() != 36 * k * k ||
            per_color != std::array<std::size_t, 3>{4 * k * k, 4 * k * k, 4 * k * k})
            fail("count formula", {});
        auto chi = static_cast<long>(c.vertices) - static_cast<long>(c.edges.size()) + static_cast<long>(c.faces.size());
        if (chi != 2 - 2 * static_cast<long>(c.genus) || c.genus != 1) fail("euler characteristic", {});
    } else {
        if (c.faces.size() * 2 != 3 * k * (k + 1) || c.vertices != 3 * k * (k + 1) + 1) fail("count formula", {});
    }
    rep.passed = rep.failures.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Strings and named regions.

namespace detail {

inline void require_kind(const Colex& c, SurfaceKind kind, const char* what) {
    if (c.kind != kind) throw kind_error(std::string(what) + " requires a " + kind_name(kind) + " lattice");
}
inline void require_embedding(const Colex& c) {
    if (!c.has_embedding()) throw geometry_error("lattice carries no embedding; rebuild it with a builder");
}
inline std::size_t torus_vid(const Colex& c, int r, int col) {
    const int R = c.period_rows, C = c.period_cols;
    return static_cast<std::size_t>(((r % R + R) % R) * C + (col % C + C) % C);
}

// 36 x squared distance from the centroid of the planar triangle, exact in integers.
inline long tri_centroid_dist36(const Colex& c, std::size_t v) {
    const long n = static_cast<long>(3 * c.k + 1);
    const long x = c.coords[v][0], y = c.coords[v][1];
    const long a = 6 * x + 3 * y - 3 * (n - 1), b = 3 * y - (n - 1);
    return a * a + 3 * b * b;
}

}  // namespace detail

// Closed string of color `color` on the torus. mu = 1 winds horizontally (row `offset`),
// mu = 2 vertically (column (color+1) mod 3 + 3*offset). 4k vertices either way.
inline BitVec colored_chain(const Colex& c, Color color, int mu, std::size_t offset) {
    detail::require_kind(c, SurfaceKind::TorusHex, "colored_chain");
    detail::require_embedding(c);
    BitVec out(c.vertices);
    const int skip = (color_index(color) + 1) % 3;
    if (mu == 1) {
        if (offset >= static_cast<std::size_t>(c.period_rows)) throw geometry_error("chain row offset out of range");
        for (int col = 0; col < c.period_cols; ++col)
            if (col % 3 != skip) out.set(detail::torus_vid(c, static_cast<int>(offset), col));
    } else if (mu == 2) {
        const auto col = static_cast<std::size_t>(skip) + 3 * offset;
        if (col >= static_cast<std::size_t>(c.period_cols)) throw geometry_error("chain column offset out of range");
        for (int r = 0; r < c.period_rows; ++r) out.set(detail::torus_vid(c, r, static_cast<int>(col)));
    } else {
        throw usage_error("homology class must be 1 or 2");
    }
    return out;
}

struct Loop {
    BitVec support;
    Color color;
    int homology;
};

// X1..X4 representatives: red vertical, blue horizontal, blue vertical, red horizontal.
// With Z1..Z4 = blue horizontal, red vertical, red horizontal, blue vertical the
// overlap parities form the identity.
inline std::vector<Loop> nontrivial_loops(const Colex& c) {
    detail::require_kind(c, SurfaceKind::TorusHex, "nontrivial_loops");
    std::vector<Loop> out;
    for (auto [col, mu] : std::vector<std::pair<Color, int>>{{Color::Red, 2}, {Color::Blue, 1}, {Color::Blue, 2}, {Color::Red, 1}})
        out.push_back({colored_chain(c, col, mu, 0), col, mu});
    return out;
}

namespace detail {

inline bool is_logical_support(const BinaryMatrix& faces, const BitVec& s) {
    for (const auto& row : faces.rows())
        if (row.dot(s)) return false;
    return !in_rowspace(faces, s);
}

// Straight legs from a junction qubit through each of its three faces to the border.
inline std::optional<BitVec> tri_junction_net(const Colex& c, std::size_t v) {
    const detail::TriGrid g{static_cast<int>(3 * c.k + 1)};
    const int x = c.coords[v][0], y = c.coords[v][1];
    std::map<std::pair<int, int>, std::size_t> vid;
    for (std::size_t i = 0; i < c.vertices; ++i) vid[{c.coords[i][0], c.coords[i][1]}] = i;
    BitVec out(c.vertices);
    out.set(v);
    int legs = 0;
    for (const auto& d : tri_dirs) {
        if (!g.inside(x + d[0], y + d[1]) || !TriGrid::is_face(x + d[0], y + d[1])) continue;
        ++legs;
        int taken = 0;
        for (int s = 2; g.inside(x + s * d[0], y + s * d[1]); ++s) {
            int px = x + s * d[0], py = y + s * d[1];
            if (TriGrid::is_face(px, py)) continue;
            out.set(vid.at({px, py}));
            ++taken;
        }
        if (taken % 2) return std::nullopt;
    }
    if (legs != 3) return std::nullopt;
    return out;
}

}  // namespace detail

// T^X support of weight 2k+1. For k >= 3 it is a junction qubit with three straight
// legs, one through each of its faces; for k <= 2 the border gets in the way and the
// smallest net is found by exhaustive search. Junctions are tried nearest the centroid first.
inline BitVec triangular_string_net(const Colex& c) {
    detail::require_kind(c, SurfaceKind::TriangularPlanar, "triangular_string_net");
    detail::require_embedding(c);
    const auto faces = face_matrix(c);
    const std::size_t weight = 2 * c.k + 1;
    std::vector<std::size_t> order(c.vertices);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return detail::tri_centroid_dist36(c, a) < detail::tri_centroid_dist36(c, b); });
    if (c.k >= 3) {
        for (auto v : order) {
            auto net = detail::tri_junction_net(c, v);
            if (net && net->count() == weight && detail::is_logical_support(faces, *net)) return *net;
        }
    } else {
        for (auto v : order) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < c.vertices; ++i)
                if (i != v) rest.push_back(i);
            std::vector<std::size_t> pick(weight - 1);
            for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
            while (true) {
                BitVec s(c.vertices);
                s.set(v);
                for (auto i : pick) s.set(rest[i]);
                if (detail::is_logical_support(faces, s)) return s;
                // Next combination in lexicographic order.
                std::size_t i = pick.size();
                while (i > 0 && pick[i - 1] == rest.size() - pick.size() + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    throw construction_error("no string net of weight " + std::to_string(weight) + " found");
}

// Hexagonal disk of n rings: vertices of the faces within face distance n-1 of a center face.
// Torus: centered on the face through vertex 0, needs k >= 2n. Triangular: centered on the
// full face nearest the centroid and must stay clear of the border.
inline BitVec hex_disk(const Colex& c, std::size_t n, std::optional<std::size_t> center = std::nullopt) {
    if (n < 1) throw usage_error("hex_disk needs n >= 1");
    std::size_t f0 = 0;
    if (c.kind == SurfaceKind::TorusHex) {
        if (c.k < 2 * n) throw geometry_error("hex_disk(" + std::to_string(n) + ") does not fit a k=" + std::to_string(c.k) + " torus (needs k >= 2n)");
        if (center) f0 = *center;
    } else {
        detail::require_embedding(c);
        auto vf = faces_of_vertex(c);
        if (center) {
            f0 = *center;
        } else {
            long best = -1;
            for (std::size_t f = 0; f < c.faces.size(); ++f) {
                if (c.faces[f].cycle.size() != 6) continue;
                long d = 0;
                for (auto v : c.faces[f].cycle) d += detail::tri_centroid_dist36(c, v);
                if (best < 0 || d < best) {
                    best = d;
                    f0 = f;
                }
            }
            if (best < 0) throw geometry_error("lattice has no interior face");
        }
        auto d = face_distances(c, f0);
        for (std::size_t f = 0; f < c.faces.size(); ++f)
            if (d[f] <= n - 1)
                for (auto v : c.faces[f].cycle)
                    if (vf[v].size() != 3) throw geometry_error("hex_disk(" + std::to_string(n) + ") touches the border");
    }
    if (f0 >= c.faces.size()) throw geometry_error("center face out of range");
    BitVec out = disk_vertices(c, f0, n - 1);
    if (out.count() != 6 * n * n) throw geometry_error("hex_disk(" + std::to_string(n) + ") overlaps itself");
    return out;
}

struct RegionSpec {
    std::string name;
    Color color = Color::Red;
    int mu = 1;
    std::size_t offset = 0;
    std::size_t length = 1;
    std::size_t index = 0;
    std::size_t n = 1;

    std::string to_string() const {
        if (name == "colored_chain") return name + "(" + color_name(color) + "," + std::to_string(mu) + "," + std::to_string(offset) + ")";
        if (name == "open_string") return name + "(" + std::to_string(length) + ")";
        if (name == "spin_ladder") return name + "(" + std::to_string(index) + ")";
        if (name == "hex_disk") return name + "(" + std::to_string(n) + ")";
        return name;
    }
};

inline const std::vector<std::string>& region_names() {
    static const std::vector<std::string> names{"single_spin",       "two_spins",       "colored_chain", "open_string",
                                                "red_crossing",      "red_blue_crossing", "parallel_chains", "spin_ladder",
                                                "all_vertical_ladders", "hex_disk",      "tri_red_chain", "tri_string_net"};
    return names;
}

// "colored_chain(red,1,0)", "open_string(5)", "hex_disk(2)", "spin_ladder", ...
inline RegionSpec parse_region(const std::string& text) {
    RegionSpec r;
    auto open = text.find('(');
    r.name = text.substr(0, open);
    std::vector<std::string> args;
    if (open != std::string::npos) {
        if (text.back() != ')') throw usage_error("malformed region '" + text + "'");
        std::string inner = text.substr(open + 1, text.size() - open - 2);
        std::size_t start = 0;
        while (start <= inner.size() && !inner.empty()) {
            auto comma = inner.find(',', start);
            args.push_back(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (std::find(region_names().begin(), region_names().end(), r.name) == region_names().end()) {
        throw usage_error("unknown region '" + r.name + "'");
    }
    auto num = [&](std::size_t i) -> std::size_t {
        try {
            std::size_t pos = 0;
            long v = std::stol(args.at(i), &pos);
            if (pos != args.at(i).size() || v < 0) throw usage_error("");
            return static_cast<std::size_t>(v);
        } catch (...) {
            throw usage_error("bad numeric argument in region '" + text + "'");
        }
    };
    if (r.name == "colored_chain") {
        if (!args.empty()) r.color = parse_color(args[0]);
        if (args.size() > 1) r.mu = static_cast<int>(num(1));
        if (args.size() > 2) r.offset = num(2);
    } else if (r.name == "open_string") {
        if (args.size() != 1) throw usage_error("open_string needs a length");
        r.length = num(0);
    } else if (r.name == "spin_ladder") {
        if (!args.empty()) r.index = num(0);
    } else if (r.name == "hex_disk") {
        if (!args.empty()) r.n = num(0);
    } else if (!args.empty()) {
        throw usage_error("region '" + r.name + "' takes no arguments");
    }
    return r;
}

inline Bipartition named_region(const Colex& c, const RegionSpec& spec) {
    const auto& nm = spec.name;
    if (std::find(region_names().begin(), region_names().end(), nm) == region_names().end()) {
        throw usage_error("unknown region '" + nm + "'");
    }
    detail::require_embedding(c);
    BitVec a(c.vertices);
    if (nm == "single_spin") {
        a.set(0);
    } else if (nm == "two_spins") {
        // Vertex 0 and its first neighbor.
        a.set(0);
        a.set(vertex_adjacency(c)[0].front());
    } else if (nm == "tri_red_chain") {
        detail::require_kind(c, SurfaceKind::TriangularPlanar, nm.c_str());
        // Bottom border row, one qubit short of the full border logical.
        for (std::size_t v = 0; v < 2 * c.k; ++v) a.set(v);
    } else if (nm == "tri_string_net") {
        a = triangular_string_net(c);
    } else if (nm == "hex_disk") {
        a = hex_disk(c, spec.n);
    } else {
        detail::require_kind(c, SurfaceKind::TorusHex, nm.c_str());
        const int R = c.period_rows, C = c.period_cols;
        if (nm == "colored_chain") {
            a = colored_chain(c, spec.color, spec.mu, spec.offset);
        } else if (nm == "open_string") {
            // Staircase from vertex 0: down along vertical edges, right along horizontal ones.
            if (spec.length < 1 || spec.length > static_cast<std::size_t>(2 * R)) throw geometry_error("open_string length must be in [1, 8k]");
            int r = 0, col = 0;
            for (std::size_t i = 0; i < spec.length; ++i) {
                a.set(detail::torus_vid(c, r, col));
                if ((r + col) % 2 == 0) {
                    ++r;
                } else {
                    ++col;
                }
            }
        } else if (nm == "red_crossing") {
            a = colored_chain(c, Color::Red, 1, 0) | colored_chain(c, Color::Red, 2, 0);
        } else if (nm == "red_blue_crossing") {
            a = colored_chain(c, Color::Red, 2, 0) | colored_chain(c, Color::Blue, 1, 0);
        } else if (nm == "parallel_chains") {
            a = colored_chain(c, Color::Red, 2, 0) | colored_chain(c, Color::Blue, 2, 0);
        } else if (nm == "spin_ladder") {
            // The rungs (vertical edges) between rows 2i and 2i+1.
            if (spec.index >= 2 * c.k) throw geometry_error("spin_ladder index must be < 2k");
            const int r = static_cast<int>(2 * spec.index);
            for (int col = r % 2; col < C; col += 2) {
                a.set(detail::torus_vid(c, r, col));
                a.set(detail::torus_vid(c, r + 1, col));
            }
        } else if (nm == "all_vertical_ladders") {
            // Every even column.
            for (int r = 0; r < R; ++r)
                for (int col = 0; col < C; col += 2) a.set(detail::torus_vid(c, r, col));
        }
    }
    return Bipartition(std::move(a));
}

inline Bipartition named_region(const Colex& c, const std::string& text) { return named_region(c, parse_region(text)); }

}  // namespace colex

#endif
