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

#ifndef COLEX_TOPOLOGY_HPP
#define COLEX_TOPOLOGY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "colex/colex.hpp"
#include "colex/entropy.hpp"
#include "colex/errors.hpp"
#include "colex/stabilizer.hpp"

namespace colex {

struct TeeRegions {
    std::array<Bipartition, 4> regions;
    std::size_t outer_radius = 0;  // R
    std::size_t inner_radius = 0;  // r
    std::size_t gap = 0;
    std::size_t center_face = 0;
};

struct TeeReport {
    std::array<double, 4> s{};
    double s_topo = 0;
    double gamma = 0;
    double quantum_dimension = 1;
};

struct ScalingFit {
    std::vector<std::pair<double, double>> samples;  // (boundary, entropy)
    double kappa = 0;
    double gamma = 0;
    std::vector<double> residuals;
};

namespace detail {

inline std::size_t bulk_center_face(const Colex& c) {
    if (c.kind == SurfaceKind::TorusHex) {
        const int r0 = static_cast<int>(2 * c.k);
        int c0 = static_cast<int>(3 * c.k);
        if ((c0 - r0) % 2) ++c0;
        const auto corner = torus_vid(c, r0, c0);
        for (std::size_t f = 0; f < c.faces.size(); ++f)
            if (c.faces[f].cycle.front() == corner) return f;
        throw geometry_error("no face at the torus center");
    }
    std::size_t best = c.faces.size();
    long best_d = -1;
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        if (c.faces[f].cycle.size() != 6) continue;
        long d = 0;
        for (auto v : c.faces[f].cycle) d += tri_centroid_dist36(c, v);
        if (best_d < 0 || d < best_d) {
            best_d = d;
            best = f;
        }
    }
    if (best == c.faces.size()) throw geometry_error("lattice has no interior face");
    return best;
}

}  // namespace detail

// Annulus of faces at distance r..R from a bulk face (hole = faces closer than r).
// Region 1 is the annulus, regions 2 and 3 drop a left or right sector of half-height
// `gap`, region 4 drops both. Throws unless the annulus sits in the bulk without
// touching itself and the component counts come out as m1B = m4A = 2, all others 1.
inline TeeRegions tee_regions(const Colex& c, std::size_t R, std::size_t r, std::size_t gap) {
    if (r < 1 || gap < 1 || R <= r) throw geometry_error("need r >= 1, gap >= 1 and R > r");
    if (!c.has_embedding()) throw geometry_error("lattice carries no embedding");
    TeeRegions out;
    out.outer_radius = R;
    out.inner_radius = r;
    out.gap = gap;
    out.center_face = detail::bulk_center_face(c);
    const BitVec outer = disk_vertices(c, out.center_face, R);
    const BitVec hole = disk_vertices(c, out.center_face, r - 1);
    if (outer.count() != 6 * (R + 1) * (R + 1)) throw geometry_error("annulus of radius " + std::to_string(R) + " does not fit the lattice");
    if (c.kind == SurfaceKind::TriangularPlanar) {
        auto vf = faces_of_vertex(c);
        for (auto v : outer.ones())
            if (vf[v].size() != 3) throw geometry_error("annulus touches the border");
    }

    std::array<double, 2> mid{0, 0};
    for (auto v : c.faces[out.center_face].cycle) {
        auto p = position(c, v);
        mid[0] += p[0] / 6;
        mid[1] += p[1] / 6;
    }
    const BitVec a1 = outer & hole.complement();
    BitVec left(c.vertices), right(c.vertices);
    for (auto v : a1.ones()) {
        auto p = position(c, v);
        if (std::abs(p[1] - mid[1]) >= static_cast<double>(gap)) continue;
        if (p[0] < mid[0]) left.set(v);
        if (p[0] > mid[0]) right.set(v);
    }
    out.regions[0] = Bipartition(a1);
    out.regions[1] = Bipartition(a1 & left.complement());
    out.regions[2] = Bipartition(a1 & right.complement());
    out.regions[3] = Bipartition(a1 & left.complement() & right.complement());

    const std::array<std::pair<std::size_t, std::size_t>, 4> want{{{1, 2}, {1, 1}, {1, 1}, {2, 1}}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& p = out.regions[i];
        if (!p.proper()) throw geometry_error("empty tee region");
        std::pair<std::size_t, std::size_t> got{components(c, p.a).size(), components(c, p.b()).size()};
        if (got != want[i]) {
            throw geometry_error("tee region " + std::to_string(i + 1) + " has " + std::to_string(got.first) + "/" + std::to_string(got.second) +
                                 " components, expected " + std::to_string(want[i].first) + "/" + std::to_string(want[i].second));
        }
    }
    return out;
}

// Levin-Wen combination S1 - S2 - S3 + S4 = -2 gamma over the four regions.
inline TeeReport topological_entropy(const StabilizerModel& s, const TeeRegions& t) {
    TeeReport rep;
    for (std::size_t i = 0; i < 4; ++i) rep.s[i] = entanglement_entropy(s, t.regions[i]).s_a;
    rep.s_topo = rep.s[0] - rep.s[1] - rep.s[2] + rep.s[3];
    rep.gamma = -rep.s_topo / 2;
    rep.quantum_dimension = std::exp2(rep.gamma);
    return rep;
}

// Least-squares S = kappa * dA - gamma over hexagonal disks of the given radii.
inline ScalingFit area_law_fit(const StabilizerModel& s, const std::vector<std::size_t>& n_values) {
    if (n_values.size() < 2) throw usage_error("area-law fit needs at least two disk sizes");
    const Colex& c = *s.colex;
    if (c.kind != SurfaceKind::TorusHex) throw kind_error("area_law_fit requires a torus lattice");
    ScalingFit fit;
    for (auto n : n_values) {
        auto e = entanglement_entropy(s, Bipartition(hex_disk(c, n)));
        fit.samples.emplace_back(static_cast<double>(e.boundary_size), e.s_a);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(fit.samples.size());
    for (auto [x, y] : fit.samples) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = m * sxx - sx * sx;
    if (den == 0) throw usage_error("disk sizes must differ");
    fit.kappa = (m * sxy - sx * sy) / den;
    fit.gamma = -(sy - fit.kappa * sx) / m;
    for (auto [x, y] : fit.samples) fit.residuals.push_back(y - (fit.kappa * x - fit.gamma));
    return fit;
}

}  // namespace colex

#endif
