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

#ifndef COLEX_STABILIZER_HPP
#define COLEX_STABILIZER_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "colex/colex.hpp"
#include "colex/errors.hpp"
#include "colex/gf2.hpp"

namespace colex {

struct StabilizerModel {
    std::shared_ptr<const Colex> colex;
    BinaryMatrix m_x;
    BinaryMatrix m_z;
    std::size_t log2_group_order = 0;
    std::vector<BitVec> logicals_x;
    std::vector<BitVec> logicals_z;
    std::size_t log2_normalizer_order = 0;

    std::size_t n_qubits() const { return m_x.n_cols(); }
    std::size_t n_logicals() const { return logicals_x.size(); }
};

// Amplitudes a_t over logical labels t in {0,1}^L; bit i of t applies X_i.
struct LogicalState {
    std::size_t n_logicals = 0;
    std::vector<std::complex<double>> coeffs;

    static LogicalState basis(std::size_t n_logicals, std::size_t label = 0) {
        LogicalState s{n_logicals, std::vector<std::complex<double>>(std::size_t{1} << n_logicals)};
        s.coeffs.at(label) = 1.0;
        return s;
    }
    // sqrt(alpha)|t0> + sqrt(1 - alpha)|t1>
    static LogicalState pair(std::size_t n_logicals, std::size_t t0, std::size_t t1, double alpha) {
        LogicalState s{n_logicals, std::vector<std::complex<double>>(std::size_t{1} << n_logicals)};
        s.coeffs.at(t0) += std::sqrt(alpha);
        s.coeffs.at(t1) += std::sqrt(1.0 - alpha);
        return s;
    }

    double norm2() const {
        double n = 0;
        for (auto a : coeffs) n += std::norm(a);
        return n;
    }
    void check(std::size_t expected_logicals) const {
        if (n_logicals != expected_logicals || coeffs.size() != (std::size_t{1} << n_logicals)) {
            throw usage_error("state has " + std::to_string(n_logicals) + " logical qubits, model has " + std::to_string(expected_logicals));
        }
        if (std::abs(norm2() - 1.0) > 1e-12) throw usage_error("logical state is not normalized");
    }
};

inline std::size_t ground_degeneracy(const StabilizerModel& s) { return s.n_qubits() - rank(s.m_x) - rank(s.m_z); }

// X logicals commute with every Z plaquette, Z logicals with every X plaquette,
// overlaps X_i.Z_j are odd exactly on the diagonal, and both families are
// independent modulo the stabilizers and exhaust the encoded qubits.
inline bool check_logical_algebra(const StabilizerModel& s) {
    const auto L = s.logicals_x.size();
    if (s.logicals_z.size() != L || L != ground_degeneracy(s)) return false;
    for (std::size_t i = 0; i < L; ++i) {
        for (const auto& row : s.m_z.rows())
            if (row.dot(s.logicals_x[i])) return false;
        for (const auto& row : s.m_x.rows())
            if (row.dot(s.logicals_z[i])) return false;
        for (std::size_t j = 0; j < L; ++j)
            if (s.logicals_x[i].dot(s.logicals_z[j]) != (i == j)) return false;
    }
    BinaryMatrix ax = s.m_x, az = s.m_z;
    for (std::size_t i = 0; i < L; ++i) {
        ax.append_row(s.logicals_x[i]);
        az.append_row(s.logicals_z[i]);
    }
    return rank(ax) == rank(s.m_x) + L && rank(az) == rank(s.m_z) + L;
}

inline StabilizerModel build_model(const Colex& c) {
    auto rep = validate_colex(c);
    if (!rep.passed) throw construction_error("lattice failed validation: " + rep.failures.front().rule);
    StabilizerModel s;
    s.colex = std::make_shared<const Colex>(c);
    s.m_x = face_matrix(c);
    s.m_z = s.m_x;
    s.log2_group_order = rank(s.m_x);
    // Size of the X-type normalizer: X strings commuting with every Z plaquette.
    s.log2_normalizer_order = c.vertices - rank(s.m_z);
    if (c.kind == SurfaceKind::TorusHex) {
        for (const auto& l : nontrivial_loops(c)) s.logicals_x.push_back(l.support);
        s.logicals_z = {colored_chain(c, Color::Blue, 1, 0), colored_chain(c, Color::Red, 2, 0), colored_chain(c, Color::Red, 1, 0),
                        colored_chain(c, Color::Blue, 2, 0)};
    } else {
        auto net = triangular_string_net(c);
        s.logicals_x = {net};
        s.logicals_z = {net};
    }
    if (!check_logical_algebra(s)) throw construction_error("logical operators do not form canonical pairs");
    return s;
}

// X support of the logical operator for label t.
inline BitVec logical_support(const StabilizerModel& s, std::size_t t) {
    BitVec out(s.n_qubits());
    for (std::size_t i = 0; i < s.logicals_x.size(); ++i)
        if (t >> i & 1u) out ^= s.logicals_x[i];
    return out;
}

}  // namespace colex

#endif
