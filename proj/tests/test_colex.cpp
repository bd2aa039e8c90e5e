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

#include <set>

#include "colex/io.hpp"
#include "util.hpp"

using namespace colex;

namespace {

BitVec face_support(const Colex& c, const Face& f) { return BitVec::from_indices(c.vertices, f.cycle); }

bool reports(const Colex& c, const std::string& rule) { return validate_colex(c).has(rule); }

}  // namespace

TEST(TorusBuilder, CountsK1) {
    auto c = build_torus_colex(1);
    EXPECT_EQ(c.faces.size(), 12u);
    EXPECT_EQ(c.vertices, 24u);
    EXPECT_EQ(c.edges.size(), 36u);
    std::array<int, 3> per{};
    for (const auto& f : c.faces) ++per[color_index(f.color)];
    EXPECT_EQ(per, (std::array<int, 3>{4, 4, 4}));
}

TEST(TorusBuilder, CountsK2) {
    auto c = build_torus_colex(2);
    EXPECT_EQ(c.faces.size(), 48u);
    EXPECT_EQ(c.vertices, 96u);
}

TEST(TriangularBuilder, Counts) {
    auto c1 = build_triangular_colex(1);
    EXPECT_EQ(c1.faces.size(), 3u);
    EXPECT_EQ(c1.vertices, 7u);
    auto c2 = build_triangular_colex(2);
    EXPECT_EQ(c2.faces.size(), 9u);
    EXPECT_EQ(c2.vertices, 19u);
}

TEST(Builders, RejectZeroK) {
    EXPECT_THROW(build_torus_colex(0), usage_error);
    EXPECT_THROW(build_triangular_colex(0), usage_error);
}

TEST(Validate, BuildersPassForSmallK) {
    for (std::size_t k = 1; k <= 4; ++k) {
        for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
            auto rep = validate_colex(build_colex(kind, k));
            EXPECT_TRUE(rep.passed) << kind_name(kind) << " k=" << k << " first failure: " << (rep.failures.empty() ? "" : rep.failures[0].rule);
        }
    }
}

TEST(Validate, RecolorToNeighborColorIsSameColorAdjacency) {
    auto c = build_torus_colex(2);
    auto adj = face_adjacency(c);
    c.faces[0].color = c.faces[adj[0].front()].color;
    EXPECT_TRUE(reports(c, "same-color adjacency"));
}

TEST(Validate, EveryRecolorOfEveryFaceIsCaught) {
    for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
        const auto base = build_colex(kind, 2);
        for (std::size_t f = 0; f < base.faces.size(); ++f) {
            for (int shift = 1; shift <= 2; ++shift) {
                auto c = base;
                c.faces[f].color = color_from_index(color_index(c.faces[f].color) + shift);
                EXPECT_FALSE(validate_colex(c).passed) << kind_name(kind) << " face " << f;
            }
        }
    }
}

TEST(Validate, EveryEdgeDeletionIsCaught) {
    for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
        for (std::size_t k = 1; k <= 2; ++k) {
            const auto base = build_colex(kind, k);
            for (std::size_t e = 0; e < base.edges.size(); ++e) {
                auto c = base;
                c.edges.erase(c.edges.begin() + static_cast<long>(e));
                auto rep = validate_colex(c);
                EXPECT_FALSE(rep.passed) << kind_name(kind) << " k=" << k << " edge " << e;
                EXPECT_TRUE(rep.has("face cycle"));
            }
        }
    }
}

TEST(Validate, OtherDefects) {
    auto c = build_torus_colex(1);
    auto dup = c;
    dup.edges.push_back(dup.edges.front());
    EXPECT_TRUE(reports(dup, "duplicate edge"));
    auto range = c;
    range.faces[0].cycle[0] = 999;
    EXPECT_TRUE(reports(range, "vertex range"));
    auto recolored_edge = c;
    recolored_edge.edges[0].color = color_from_index(color_index(recolored_edge.edges[0].color) + 1);
    EXPECT_TRUE(reports(recolored_edge, "edge color"));
}

TEST(TorusInvariants, EulerAndValency) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto c = build_torus_colex(k);
        EXPECT_EQ(static_cast<long>(c.vertices) - static_cast<long>(c.edges.size()) + static_cast<long>(c.faces.size()), 0);
        for (const auto& n : vertex_adjacency(c)) EXPECT_EQ(n.size(), 3u);
        for (const auto& f : c.faces) EXPECT_EQ(f.cycle.size(), 6u);
    }
}

// XOR of all faces of one color covers every vertex once.
TEST(TorusInvariants, ColorProductsAreAllOnes) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto c = build_torus_colex(k);
        for (int col = 0; col < 3; ++col) {
            BitVec acc(c.vertices);
            for (const auto& f : c.faces)
                if (color_index(f.color) == col) acc ^= face_support(c, f);
            EXPECT_EQ(acc.count(), c.vertices) << "k=" << k << " color " << col;
        }
        EXPECT_EQ(rank(face_matrix(c)), c.faces.size() - 2);
    }
}

TEST(TriangularInvariants, PlaquettesIndependent) {
    for (std::size_t k = 1; k <= 5; ++k) {
        auto c = build_triangular_colex(k);
        EXPECT_EQ(rank(face_matrix(c)), c.faces.size());
        EXPECT_EQ(testutil::naive_rank(testutil::to_dense(face_matrix(c))), c.faces.size());
    }
}

TEST(TriangularInvariants, SmallExhaustiveIndependence) {
    // k=1,2: check every nonempty subset of faces directly.
    for (std::size_t k = 1; k <= 2; ++k) {
        auto c = build_triangular_colex(k);
        const std::size_t p = c.faces.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << p); ++mask) {
            BitVec acc(c.vertices);
            for (std::size_t f = 0; f < p; ++f)
                if (mask >> f & 1) acc ^= face_support(c, c.faces[f]);
            ASSERT_TRUE(acc.any()) << "k=" << k << " mask " << mask;
        }
    }
}

TEST(Regions, AdvertisedCardinalities) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto c = build_torus_colex(k);
        EXPECT_EQ(named_region(c, "single_spin").a_size(), 1u);
        EXPECT_EQ(named_region(c, "two_spins").a_size(), 2u);
        for (auto col : {"red", "green", "blue"})
            for (int mu = 1; mu <= 2; ++mu)
                EXPECT_EQ(named_region(c, std::string("colored_chain(") + col + "," + std::to_string(mu) + ",0)").a_size(), 4 * k);
        for (std::size_t len = 1; len <= 8; ++len) EXPECT_EQ(named_region(c, "open_string(" + std::to_string(len) + ")").a_size(), len);
        EXPECT_EQ(named_region(c, "red_crossing").a_size(), 8 * k);
        EXPECT_EQ(named_region(c, "parallel_chains").a_size(), 8 * k);
        EXPECT_EQ(named_region(c, "spin_ladder").a_size(), 6 * k);
        for (std::size_t n = 1; 2 * n <= k; ++n) EXPECT_EQ(named_region(c, "hex_disk(" + std::to_string(n) + ")").a_size(), 6 * n * n);
    }
    for (std::size_t k = 1; k <= 4; ++k) {
        auto c = build_triangular_colex(k);
        EXPECT_EQ(named_region(c, "tri_red_chain").a_size(), 2 * k);
        EXPECT_EQ(named_region(c, "tri_string_net").a_size(), 2 * k + 1);
    }
}

TEST(Regions, HexDiskIsOneFaceAtN1) {
    auto c = build_torus_colex(2);
    auto disk = hex_disk(c, 1);
    bool found = false;
    for (const auto& f : c.faces) found = found || face_support(c, f) == disk;
    EXPECT_TRUE(found);
}

TEST(Regions, Errors) {
    auto t = build_torus_colex(1);
    EXPECT_THROW(named_region(t, "hex_disk(1)"), geometry_error);
    EXPECT_THROW(named_region(t, "nonsense"), usage_error);
    EXPECT_THROW(named_region(t, "open_string(9)"), geometry_error);
    EXPECT_THROW(named_region(t, "tri_red_chain"), kind_error);
    auto tri = build_triangular_colex(1);
    EXPECT_THROW(nontrivial_loops(tri), kind_error);
    EXPECT_THROW(named_region(tri, "colored_chain"), kind_error);
}

TEST(Regions, ParseRoundTrip) {
    for (std::string s : {"colored_chain(green,2,1)", "open_string(5)", "spin_ladder(1)", "hex_disk(2)", "red_crossing"}) EXPECT_EQ(parse_region(s).to_string(), s);
    EXPECT_THROW(parse_region("hex_disk(x)"), usage_error);
    EXPECT_THROW(parse_region("open_string"), usage_error);
}

// Every face meets a colored chain in an even number of vertices. The chain is 2k
// disjoint edges of its own color and is not a product of plaquettes.
TEST(ColoredChain, EvenOverlapAndNontrivial) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto c = build_torus_colex(k);
        auto m = face_matrix(c);
        for (int col = 0; col < 3; ++col) {
            for (int mu = 1; mu <= 2; ++mu) {
                auto chain = colored_chain(c, color_from_index(col), mu, 0);
                for (const auto& f : c.faces) {
                    auto o = face_support(c, f).overlap(chain);
                    EXPECT_TRUE(o == 0 || o == 2);
                }
                EXPECT_FALSE(in_rowspace(m, chain));
                auto comps = components(c, chain);
                EXPECT_EQ(comps.size(), 2 * k);
                for (const auto& comp : comps) ASSERT_EQ(comp.size(), 2u);
                for (const auto& e : c.edges) {
                    if (chain.get(e.u) && chain.get(e.v)) {
                        EXPECT_EQ(e.color, color_from_index(col));
                    }
                }
            }
        }
    }
}

TEST(Loops, FourOfWeightFourAtK1) {
    auto c = build_torus_colex(1);
    auto loops = nontrivial_loops(c);
    ASSERT_EQ(loops.size(), 4u);
    for (const auto& l : loops) EXPECT_EQ(l.support.count(), 4u);
}

TEST(StringNet, WeightAndCommutation) {
    for (std::size_t k = 1; k <= 6; ++k) {
        auto c = build_triangular_colex(k);
        auto net = triangular_string_net(c);
        EXPECT_EQ(net.count(), 2 * k + 1);
        auto m = face_matrix(c);
        for (const auto& r : m.rows()) EXPECT_FALSE(r.dot(net));
        EXPECT_FALSE(in_rowspace(m, net));
    }
}

TEST(StringNet, K1PassesThroughCentralVertex) {
    auto c = build_triangular_colex(1);
    auto fv = faces_of_vertex(c);
    auto net = triangular_string_net(c);
    std::size_t central = 0;
    for (std::size_t v = 0; v < c.vertices; ++v)
        if (fv[v].size() == 3) central = v;
    EXPECT_TRUE(net.get(central));
}

TEST(Io, JsonRoundTripKeepsEmbedding) {
    for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
        auto c = build_colex(kind, 2);
        auto back = colex_from_json(nlohmann::json::parse(to_json(c).dump()));
        EXPECT_EQ(back.faces, c.faces);
        EXPECT_EQ(back.edges, c.edges);
        EXPECT_TRUE(back.has_embedding());
        EXPECT_TRUE(validate_colex(back).passed);
    }
}

TEST(Io, EditedDocumentLosesEmbedding) {
    auto base = build_torus_colex(1);
    auto j = to_json(base);
    j["faces"][0]["color"] = color_name(base.faces[face_adjacency(base)[0].front()].color);
    auto c = colex_from_json(j);
    EXPECT_FALSE(c.has_embedding());
    EXPECT_FALSE(validate_colex(c).passed);
}

TEST(Io, RegionFiles) {
    auto p = region_from_json(nlohmann::json::parse("[0, 3, 5]"), 7);
    EXPECT_EQ(p.a_vertices(), (std::vector<std::size_t>{0, 3, 5}));
    EXPECT_EQ(region_from_json(nlohmann::json::parse(R"({"vertices": [1]})"), 7).a_size(), 1u);
    EXPECT_THROW(region_from_json(nlohmann::json::parse("[7]"), 7), usage_error);
    EXPECT_THROW(region_from_json(nlohmann::json::parse("[-1]"), 7), usage_error);
    EXPECT_THROW(region_from_json(nlohmann::json::parse(R"({"x": 1})"), 7), usage_error);
    EXPECT_THROW(colex_from_json(nlohmann::json::parse(R"({"kind": "torus"})")), usage_error);
}

class ColexProperty : public ::testing::TestWithParam<std::size_t> {};

// Face distances from any face are a metric on the dual graph: neighbors differ by at most one.
TEST_P(ColexProperty, FaceDistancesAreConsistent) {
    for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
        auto c = build_colex(kind, GetParam());
        auto adj = face_adjacency(c);
        std::mt19937 rng(static_cast<unsigned>(GetParam()));
        for (int trial = 0; trial < 5; ++trial) {
            const std::size_t center = rng() % c.faces.size();
            auto d = face_distances(c, center);
            EXPECT_EQ(d[center], 0u);
            for (std::size_t f = 0; f < c.faces.size(); ++f)
                for (auto g : adj[f]) EXPECT_LE(d[f] > d[g] ? d[f] - d[g] : d[g] - d[f], 1u);
        }
    }
}

TEST_P(ColexProperty, EdgesBelongToFacesAndColorsAreProper) {
    for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
        auto c = build_colex(kind, GetParam());
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& e : c.edges) EXPECT_TRUE(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
        auto fv = faces_of_vertex(c);
        for (std::size_t v = 0; v < c.vertices; ++v) {
            std::set<int> colors;
            for (auto f : fv[v]) colors.insert(color_index(c.faces[f].color));
            EXPECT_EQ(colors.size(), fv[v].size());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(K, ColexProperty, ::testing::Values(1u, 2u, 3u, 4u));
