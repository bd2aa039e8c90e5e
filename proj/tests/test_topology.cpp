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

#include <gtest/gtest.h>

#include "util.hpp"

using namespace colex;

namespace {

const StabilizerModel& model(SurfaceKind kind, std::size_t k) {
    static std::map<std::pair<int, std::size_t>, StabilizerModel> cache;
    auto key = std::make_pair(static_cast<int>(kind), k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_model(build_colex(kind, k))).first;
    return it->second;
}

std::pair<std::size_t, std::size_t> counts(const Colex& c, const Bipartition& p) { return {components(c, p.a).size(), components(c, p.b()).size()}; }

}  // namespace

TEST(TeeRegions, ComponentCountsAtK4) {
    const auto& s = model(SurfaceKind::TorusHex, 4);
    auto t = tee_regions(*s.colex, 2, 1, 1);
    using P = std::pair<std::size_t, std::size_t>;
    EXPECT_EQ(counts(*s.colex, t.regions[0]), P(1, 2));
    EXPECT_EQ(counts(*s.colex, t.regions[1]), P(1, 1));
    EXPECT_EQ(counts(*s.colex, t.regions[2]), P(1, 1));
    EXPECT_EQ(counts(*s.colex, t.regions[3]), P(2, 1));
    EXPECT_EQ(t.regions[0].a_size(), 6u * 9 - 6);
}

TEST(Tee, TorusK4Default) {
    const auto& s = model(SurfaceKind::TorusHex, 4);
    auto rep = topological_entropy(s, tee_regions(*s.colex, 2, 1, 1));
    EXPECT_EQ(rep.s_topo, -4);
    EXPECT_EQ(rep.gamma, 2);
    EXPECT_EQ(rep.quantum_dimension, 4);
    // The opposite sign convention of the same four entropies.
    EXPECT_EQ(-rep.s[0] + rep.s[1] + rep.s[2] - rep.s[3], 4);
}

TEST(Tee, TorusGeometries) {
    const std::vector<std::array<std::size_t, 3>> geoms{{2, 1, 1}, {3, 1, 1}, {3, 2, 1}, {4, 2, 1}};
    for (std::size_t k : {4u, 5u}) {
        std::size_t ok = 0;
        for (auto [R, r, gap] : geoms) {
            const auto& s = model(SurfaceKind::TorusHex, k);
            try {
                auto rep = topological_entropy(s, tee_regions(*s.colex, R, r, gap));
                EXPECT_EQ(rep.s_topo, -4) << "k=" << k << " R=" << R << " r=" << r;
                ++ok;
            } catch (const geometry_error&) {
            }
        }
        EXPECT_GE(ok, 3u) << "k=" << k;
    }
}

TEST(Tee, TriangularBulkAnnulus) {
    const auto& s = model(SurfaceKind::TriangularPlanar, 8);
    auto rep = topological_entropy(s, tee_regions(*s.colex, 2, 1, 1));
    EXPECT_EQ(rep.s_topo, -4);
    EXPECT_EQ(rep.quantum_dimension, 4);
}

TEST(Tee, DegenerateRegionsCancel) {
    const auto& s = model(SurfaceKind::TorusHex, 4);
    TeeRegions t = tee_regions(*s.colex, 2, 1, 1);
    t.regions = {t.regions[0], t.regions[0], t.regions[0], t.regions[0]};
    EXPECT_EQ(topological_entropy(s, t).s_topo, 0);
}

TEST(Tee, IllFittingGeometry) {
    EXPECT_THROW(tee_regions(*model(SurfaceKind::TorusHex, 1).colex, 2, 1, 1), geometry_error);
    EXPECT_THROW(tee_regions(*model(SurfaceKind::TorusHex, 4).colex, 2, 1, 2), geometry_error);
    EXPECT_THROW(tee_regions(*model(SurfaceKind::TorusHex, 4).colex, 1, 1, 1), geometry_error);
    EXPECT_THROW(tee_regions(*model(SurfaceKind::TriangularPlanar, 8).colex, 3, 1, 1), geometry_error);
    EXPECT_THROW(tee_regions(*model(SurfaceKind::TriangularPlanar, 3).colex, 2, 1, 1), geometry_error);
}

TEST(AreaLaw, K4TwoDisks) {
    auto fit = area_law_fit(model(SurfaceKind::TorusHex, 4), {1, 2});
    ASSERT_EQ(fit.samples.size(), 2u);
    EXPECT_EQ(fit.samples[0], std::make_pair(6.0, 4.0));
    EXPECT_EQ(fit.samples[1], std::make_pair(12.0, 10.0));
    EXPECT_NEAR(fit.kappa, 1.0, 1e-12);
    EXPECT_NEAR(fit.gamma, 2.0, 1e-12);
}

TEST(AreaLaw, K6ThreeDisksExact) {
    auto fit = area_law_fit(model(SurfaceKind::TorusHex, 6), {1, 2, 3});
    for (double r : fit.residuals) EXPECT_NEAR(r, 0.0, 1e-12);
    EXPECT_NEAR(fit.gamma, 2.0, 1e-12);
}

TEST(AreaLaw, Errors) {
    EXPECT_THROW(area_law_fit(model(SurfaceKind::TorusHex, 4), {1}), usage_error);
    EXPECT_THROW(area_law_fit(model(SurfaceKind::TorusHex, 4), {1, 1}), usage_error);
    EXPECT_THROW(area_law_fit(model(SurfaceKind::TriangularPlanar, 3), {1, 2}), kind_error);
    EXPECT_THROW(area_law_fit(model(SurfaceKind::TorusHex, 2), {1, 2}), geometry_error);
}

TEST(AreaLaw, TopologicalEntropyIsMinusTwoGamma) {
    const auto& s = model(SurfaceKind::TorusHex, 5);
    auto fit = area_law_fit(s, {1, 2});
    auto rep = topological_entropy(s, tee_regions(*s.colex, 2, 1, 1));
    EXPECT_NEAR(rep.s_topo, -2 * fit.gamma, 1e-12);
}

// Adding or removing the spins of one face next to a region leaves s_topo alone as
// long as no region changes its component structure.
class TeeDeformation : public ::testing::TestWithParam<SurfaceKind> {};

TEST_P(TeeDeformation, OneFaceEditsKeepValue) {
    const auto kind = GetParam();
    const auto& s = model(kind, kind == SurfaceKind::TorusHex ? 5 : 9);
    const Colex& c = *s.colex;
    const TeeRegions base = tee_regions(c, 2, 1, 1);
    auto dist = face_distances(c, base.center_face);
    std::size_t tried = 0;
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        if (dist[f] != 3 && dist[f] != 2) continue;
        const BitVec fv = BitVec::from_indices(c.vertices, c.faces[f].cycle);
        for (bool add : {true, false}) {
            TeeRegions t = base;
            bool same_topology = true;
            for (std::size_t i = 0; i < 4; ++i) {
                BitVec a = t.regions[i].a;
                if (add) {
                    a |= fv;
                } else {
                    a &= fv.complement();
                }
                Bipartition p(a);
                if (!p.proper() || counts(c, p) != counts(c, base.regions[i])) same_topology = false;
                t.regions[i] = p;
            }
            if (!same_topology || t.regions[0].a == base.regions[0].a) continue;
            ++tried;
            EXPECT_EQ(topological_entropy(s, t).s_topo, -4) << "face " << f << (add ? " added" : " removed");
        }
    }
    EXPECT_GE(tried, 6u);
}

INSTANTIATE_TEST_SUITE_P(Kinds, TeeDeformation, ::testing::Values(SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar),
                         [](const auto& info) { return std::string(kind_name(info.param)); });
