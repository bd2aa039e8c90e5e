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

#ifndef COLEX_IO_HPP
#define COLEX_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "colex/colex.hpp"
#include "colex/errors.hpp"
#include "json.hpp"

namespace colex {

// Lattice document: {kind, k, vertices, edges: [{u, v, color}], faces: [{cycle, color}]}.
inline nlohmann::json to_json(const Colex& c) {
    nlohmann::json j;
    j["kind"] = kind_name(c.kind);
    j["k"] = c.k;
    j["vertices"] = c.vertices;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& e : c.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"color", color_name(e.color)}});
    auto& faces = j["faces"] = nlohmann::json::array();
    for (const auto& f : c.faces) faces.push_back({{"cycle", f.cycle}, {"color", color_name(f.color)}});
    return j;
}

// A document identical to the builder output gets the builder's embedding back, so named
// regions work on it. Anything else (edited or hand-made) has no embedding.
inline Colex colex_from_json(const nlohmann::json& j) {
    try {
        Colex c;
        c.kind = parse_kind(j.at("kind").get<std::string>());
        c.k = j.at("k").get<std::size_t>();
        c.genus = c.kind == SurfaceKind::TorusHex ? 1 : 0;
        c.vertices = j.at("vertices").get<std::size_t>();
        for (const auto& e : j.at("edges")) c.edges.push_back({e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(), parse_color(e.at("color").get<std::string>())});
        for (const auto& f : j.at("faces")) c.faces.push_back({f.at("cycle").get<std::vector<std::size_t>>(), parse_color(f.at("color").get<std::string>())});
        if (c.k >= 1 && c.k <= 64) {
            Colex ref = build_colex(c.kind, c.k);
            if (ref.vertices == c.vertices && ref.edges == c.edges && ref.faces == c.faces) return ref;
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed lattice document: ") + e.what());
    }
}

// Region file: a JSON list of vertex ids, or an object {"vertices": [...]}.
inline Bipartition region_from_json(const nlohmann::json& j, std::size_t n_vertices) {
    std::vector<long long> ids;
    try {
        const auto& list = j.is_object() ? j.at("vertices") : j;
        ids = list.get<std::vector<long long>>();
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed region file: ") + e.what());
    }
    BitVec a(n_vertices);
    for (auto v : ids) {
        if (v < 0 || static_cast<std::size_t>(v) >= n_vertices) throw usage_error("region vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_vertices) + ")");
        a.set(static_cast<std::size_t>(v));
    }
    return Bipartition(std::move(a));
}

}  // namespace colex

#endif
