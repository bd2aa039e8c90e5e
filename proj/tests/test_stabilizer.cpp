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

TEST(Model, GroupOrders) {
    auto t1 = build_model(build_torus_colex(1));
    EXPECT_EQ(t1.log2_group_order, 10u);
    EXPECT_EQ(t1.log2_normalizer_order, 14u);
    auto tri = build_model(build_triangular_colex(1));
    EXPECT_EQ(tri.log2_group_order, 3u);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto t = build_model(build_torus_colex(k));
        EXPECT_EQ(t.log2_group_order, t.colex->faces.size() - 2);
        EXPECT_EQ(t.log2_normalizer_order, t.colex->faces.size() + 2);
        auto p = build_model(build_triangular_colex(k));
        EXPECT_EQ(p.log2_group_order, p.colex->faces.size());
    }
}

TEST(Model, FourLogicalPairsOnTorus) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto s = build_model(build_torus_colex(k));
        EXPECT_EQ(s.logicals_x.size(), 4u);
        EXPECT_EQ(s.logicals_z.size(), 4u);
        EXPECT_EQ(s.m_x, s.m_z);
    }
}

TEST(Model, Degeneracy) {
    EXPECT_EQ(ground_degeneracy(build_model(build_torus_colex(1))), 4u);
    EXPECT_EQ(ground_degeneracy(build_model(build_torus_colex(2))), 4u);
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(ground_degeneracy(build_model(build_triangular_colex(k))), 1u);
}

// Degeneracy from the independent dense elimination.
TEST(Model, DegeneracyMatchesNaiveRank) {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (auto kind : {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar}) {
            auto c = build_colex(kind, k);
            auto r = testutil::naive_rank(testutil::to_dense(face_matrix(c)));
            EXPECT_EQ(c.vertices - 2 * r, kind == SurfaceKind::TorusHex ? 4u : 1u);
        }
    }
}

TEST(Model, LogicalAlgebra) {
    auto s = build_model(build_torus_colex(1));
    EXPECT_TRUE(check_logical_algebra(s));
    auto broken = s;
    broken.logicals_x[0] = s.m_x.row(0);  // contractible loop
    EXPECT_FALSE(check_logical_algebra(broken));

    auto tri = build_model(build_triangular_colex(1));
    EXPECT_TRUE(check_logical_algebra(tri));
    EXPECT_EQ(tri.logicals_x[0].overlap(tri.logicals_z[0]) % 2, 1u);
}

TEST(Model, SymplecticPairingTable) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto s = build_model(build_torus_colex(k));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(s.logicals_x[i].dot(s.logicals_z[j]), i == j) << i << "," << j;
    }
}

TEST(Model, InvalidLatticeRejected) {
    auto c = build_torus_colex(1);
    c.edges.pop_back();
    EXPECT_THROW(build_model(c), construction_error);
}

TEST(Model, LogicalSupportIsXorOfLabels) {
    auto s = build_model(build_torus_colex(1));
    EXPECT_FALSE(logical_support(s, 0).any());
    auto both = s.logicals_x[0];
    both ^= s.logicals_x[2];
    EXPECT_EQ(logical_support(s, 0b0101), both);
}

TEST(LogicalStateTest, Validation) {
    EXPECT_NO_THROW(LogicalState::basis(4, 3).check(4));
    EXPECT_THROW(LogicalState::basis(1, 0).check(4), usage_error);
    auto bad = LogicalState::basis(4, 0);
    bad.coeffs[1] = 1.0;
    EXPECT_THROW(bad.check(4), usage_error);
    EXPECT_NEAR(LogicalState::pair(4, 0, 5, 0.3).norm2(), 1.0, 1e-15);
}

class StabilizerProperty : public ::testing::TestWithParam<std::size_t> {};

TEST_P(StabilizerProperty, LogicalsRaiseRankIndependently) {
    auto s = build_model(build_torus_colex(GetParam()));
    const auto base = rank(s.m_x);
    auto all = s.m_x;
    for (const auto& l : s.logicals_x) {
        auto one = s.m_x;
        one.append_row(l);
        EXPECT_EQ(rank(one), base + 1);
        all.append_row(l);
    }
    EXPECT_EQ(rank(all), base + 4);
}

TEST_P(StabilizerProperty, DeformedLogicalsKeepAlgebra) {
    auto s = build_model(build_torus_colex(GetParam()));
    std::mt19937 rng(static_cast<unsigned>(GetParam()) * 31u);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = s;
        for (auto& l : d.logicals_x) {
            const auto y = testutil::random_vec(rng, s.m_x.n_rows());
            l ^= combine_rows(s.m_x, y);
        }
        EXPECT_TRUE(check_logical_algebra(d));
        for (const auto& l : d.logicals_x) {
            for (const auto& r : d.m_z.rows()) EXPECT_FALSE(r.dot(l));
            EXPECT_FALSE(in_rowspace(d.m_x, l));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(K, StabilizerProperty, ::testing::Values(1u, 2u, 3u));

// Entropies computed on the dense state do not see which representative was used.
TEST(StabilizerDeformation, OracleEntropyUnchanged) {
    auto s = build_model(build_torus_colex(1));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = s;
        for (auto& l : d.logicals_x) l ^= s.m_x.row(rng() % s.m_x.n_rows());
        auto p = testutil::random_region(rng, s.n_qubits(), 8);
        const std::size_t t = rng() % 16;
        EXPECT_NEAR(oracle_entropy(s, LogicalState::basis(4, t), p).s_a, oracle_entropy(d, LogicalState::basis(4, t), p).s_a, 1e-9);
        auto a = LogicalState::pair(4, t, t ^ 3u, 0.3);
        EXPECT_NEAR(oracle_entropy(s, a, p).s_a, oracle_entropy(d, a, p).s_a, 1e-9);
    }
}
