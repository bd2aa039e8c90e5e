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

#ifndef COLEX_REPORT_HPP
#define COLEX_REPORT_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "colex/colex.hpp"
#include "colex/entropy.hpp"
#include "colex/stabilizer.hpp"
#include "colex/topology.hpp"
#include "json.hpp"

namespace colex {

// Integers print as integers, everything else with nine decimals.
struct Value {
    double v = 0;
    bool exact = true;

    std::string str() const {
        char buf[64];
        if (exact) {
            std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
        } else {
            std::snprintf(buf, sizeof buf, "%.9f", v);
        }
        return buf;
    }
};

struct Row {
    std::string name;
    std::string kind;
    std::size_t k = 0;
    std::string params;
    std::optional<Value> formula;
    Value computed;
    std::optional<bool> match;
};

inline bool all_match(const std::vector<Row>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match.value_or(true); });
}

// Worker count: COLEX_THREADS if set, else the hardware concurrency.
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COLEX_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// Runs tasks on up to `threads` workers; results keep task order.
inline std::vector<Row> run_rows(const std::vector<std::function<Row()>>& tasks, unsigned threads) {
    std::vector<Row> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(threads, tasks.size()); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

inline Row compare_row(std::string name, const Colex& c, std::string params, Value formula, Value computed) {
    Row r{std::move(name), kind_name(c.kind), c.k, std::move(params), formula, computed, std::nullopt};
    r.match = formula.exact && computed.exact ? formula.v == computed.v : std::abs(formula.v - computed.v) <= 1e-9;
    return r;
}

inline std::vector<Row> closed_form_rows(const StabilizerModel& s, unsigned threads = 1) {
    const Colex& c = *s.colex;
    const long k = static_cast<long>(c.k);
    std::vector<std::function<Row()>> tasks;
    auto entropy_row = [&](std::string label, std::string region, std::string params, long expected) {
        tasks.push_back([&s, &c, label, region, params, expected] {
            auto e = entanglement_entropy(s, named_region(c, region));
            return compare_row(label, c, params, {static_cast<double>(expected), true}, {e.s_a, true});
        });
    };
    if (c.kind == SurfaceKind::TorusHex) {
        entropy_row("single_spin", "single_spin", "", 1);
        entropy_row("two_spins", "two_spins", "", 2);
        tasks.push_back([&s, &c] {
            auto rho = stabilizer_density(s, 0, named_region(c, "two_spins"));
            return compare_row("two_spins_concurrence", c, "", {0.0, false}, {concurrence_two_qubit(rho), false});
        });
        entropy_row("colored_chain", "colored_chain(red,1,0)", "color=red;mu=1;offset=0", 4 * k - 1);
        for (long len = 1; len <= 8; ++len)
            entropy_row("open_string", "open_string(" + std::to_string(len) + ")", "k'=" + std::to_string(len), len);
        entropy_row("red_crossing", "red_crossing", "", 8 * k - 1);
        entropy_row("red_blue_crossing", "red_blue_crossing", "", 8 * k - 3);
        entropy_row("parallel_chains", "parallel_chains", "", 8 * k - 2);
        entropy_row("spin_ladder", "spin_ladder(0)", "index=0", 6 * k);
        entropy_row("all_vertical_ladders", "all_vertical_ladders", "", 12 * k * k - 4 * k - 2);
        for (long n = 1; n <= 2; ++n)
            if (k >= 2 * n) entropy_row("hex_disk", "hex_disk(" + std::to_string(n) + ")", "n=" + std::to_string(n), 6 * n - 2);
    } else {
        entropy_row("tri_red_chain", "tri_red_chain", "", 2 * k);
        entropy_row("tri_string_net", "tri_string_net", "", 2 * k);
        // Interior disk rows only where a weight-6 disk stays off the border.
        bool fits = true;
        try {
            named_region(c, "hex_disk(1)");
        } catch (const geometry_error&) {
            fits = false;
        }
        if (fits) {
            tasks.push_back([&s, &c] {
                auto p = named_region(c, "hex_disk(1)");
                auto sigma = counting_summary(c, p).sigma_ab;
                auto e = entanglement_entropy(s, p);
                return compare_row("hex_disk", c, "n=1;sigma_ab=" + std::to_string(sigma), {static_cast<double>(sigma) - 2, true}, {e.s_a, true});
            });
        }
        tasks.push_back([&s, &c] {
            return compare_row("encoded_qubits", c, "", {1, true}, {static_cast<double>(ground_degeneracy(s)), true});
        });
    }
    return run_rows(tasks, threads);
}

inline std::vector<Row> degeneracy_rows(const StabilizerModel& s) {
    const Colex& c = *s.colex;
    const double P = static_cast<double>(c.faces.size());
    const bool torus = c.kind == SurfaceKind::TorusHex;
    const double g = static_cast<double>(c.genus);
    std::vector<Row> rows;
    rows.push_back(compare_row("encoded_qubits", c, "", {torus ? 4 * g : 1, true}, {static_cast<double>(ground_degeneracy(s)), true}));
    rows.push_back(compare_row("log2_group_order", c, "", {torus ? P - 2 : P, true}, {static_cast<double>(s.log2_group_order), true}));
    // Planar code: Z plaquettes are independent, so the X normalizer has |V| - |P| = |P| + 1 generators.
    rows.push_back(compare_row("log2_normalizer_order", c, "", {torus ? P + 4 * g - 2 : P + 1, true}, {static_cast<double>(s.log2_normalizer_order), true}));
    rows.push_back(compare_row("logical_algebra", c, "", {1, true}, {check_logical_algebra(s) ? 1.0 : 0.0, true}));
    return rows;
}

inline std::vector<Row> tee_rows(const StabilizerModel& s, std::size_t R, std::size_t r, std::size_t gap) {
    const Colex& c = *s.colex;
    auto regions = tee_regions(c, R, r, gap);
    auto rep = topological_entropy(s, regions);
    const std::string params = "R=" + std::to_string(R) + ";r=" + std::to_string(r) + ";gap=" + std::to_string(gap);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < 4; ++i) {
        Row row{"s" + std::to_string(i + 1), kind_name(c.kind), c.k, params, std::nullopt, {rep.s[i], true}, std::nullopt};
        rows.push_back(row);
    }
    rows.push_back(compare_row("s_topo", c, params, {-4, true}, {rep.s_topo, true}));
    rows.push_back(compare_row("gamma", c, params, {2, true}, {rep.gamma, true}));
    rows.push_back(compare_row("D", c, params, {4, true}, {rep.quantum_dimension, true}));
    return rows;
}

inline std::vector<Row> scaling_rows(const StabilizerModel& s, const std::vector<std::size_t>& ns) {
    const Colex& c = *s.colex;
    auto fit = area_law_fit(s, ns);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double n = static_cast<double>(ns[i]);
        rows.push_back(compare_row("hex_disk", c, "n=" + std::to_string(ns[i]) + ";boundary=" + Value{fit.samples[i].first, true}.str(),
                                   {6 * n - 2, true}, {fit.samples[i].second, true}));
    }
    rows.push_back(compare_row("kappa", c, "", {1, false}, {fit.kappa, false}));
    rows.push_back(compare_row("gamma", c, "", {2, false}, {fit.gamma, false}));
    double worst = 0;
    for (double x : fit.residuals) worst = std::max(worst, std::abs(x));
    rows.push_back(compare_row("max_residual", c, "", {0, false}, {worst, false}));
    return rows;
}

struct OracleSample {
    Bipartition p;
    std::size_t label = 0;
};

// Seeded random bipartitions with 1 <= |A| <= max_size (kept proper), each with a random basis label.
inline std::vector<OracleSample> random_samples(const StabilizerModel& s, std::size_t n, std::uint64_t seed, std::size_t max_size = 10) {
    std::mt19937_64 rng(seed);
    const std::size_t nv = s.n_qubits();
    const std::size_t cap = std::min(max_size, nv - 1);
    std::vector<OracleSample> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> verts(nv);
        for (std::size_t v = 0; v < nv; ++v) verts[v] = v;
        const std::size_t size = 1 + rng() % cap;
        // Partial Fisher-Yates with explicit modulus keeps the draw identical across standard libraries.
        for (std::size_t j = 0; j < size; ++j) std::swap(verts[j], verts[j + rng() % (nv - j)]);
        verts.resize(size);
        out.push_back({Bipartition::from_vertices(nv, verts), static_cast<std::size_t>(rng() % (std::size_t{1} << s.n_logicals()))});
    }
    return out;
}

inline std::vector<Row> oracle_check_rows(const StabilizerModel& s, std::size_t n, std::uint64_t seed, unsigned threads = 1) {
    const Colex& c = *s.colex;
    auto samples = random_samples(s, n, seed);
    std::vector<std::function<Row()>> tasks;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        tasks.push_back([&s, &c, &samples, i] {
            const auto& smp = samples[i];
            std::string ids;
            for (auto v : smp.p.a_vertices()) ids += (ids.empty() ? "" : " ") + std::to_string(v);
            auto exact = entanglement_entropy(s, smp.p);
            auto dense = oracle_entropy(s, LogicalState::basis(s.n_logicals(), smp.label), smp.p);
            return compare_row("sample_" + std::to_string(i), c, "t=" + std::to_string(smp.label) + ";A=" + ids, {exact.s_a, false}, {dense.s_a, false});
        });
    }
    return run_rows(tasks, threads);
}

// ---------------------------------------------------------------------------
// Formatting.

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

inline std::string format_csv(const std::vector<Row>& rows) {
    std::ostringstream o;
    o << "case,kind,k,params,formula,computed,match\n";
    for (const auto& r : rows) {
        o << csv_field(r.name) << ',' << r.kind << ',' << r.k << ',' << csv_field(r.params) << ',' << (r.formula ? r.formula->str() : "") << ','
          << r.computed.str() << ',' << (r.match ? (*r.match ? "ok" : "MISMATCH") : "") << '\n';
    }
    return o.str();
}

inline std::string format_table(const std::vector<Row>& rows, const std::vector<std::string>& notes = {}) {
    std::vector<std::vector<std::string>> cells{{"case", "kind", "k", "params", "formula", "computed", "match"}};
    for (const auto& r : rows)
        cells.push_back({r.name, r.kind, std::to_string(r.k), r.params, r.formula ? r.formula->str() : "-", r.computed.str(),
                         r.match ? (*r.match ? "ok" : "MISMATCH") : "-"});
    std::vector<std::size_t> width(7, 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < 7; ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream o;
    for (const auto& n : notes) o << "# " << n << '\n';
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < 7; ++i) {
            o << row[i];
            if (i + 1 < 7) o << std::string(width[i] - row[i].size() + 2, ' ');
        }
        o << '\n';
    }
    return o.str();
}

// Numbers go through the same text as the CSV so both formats carry identical values.
inline nlohmann::json rows_to_json(const std::vector<Row>& rows) {
    auto num = [](const Value& v) -> nlohmann::json {
        if (v.exact) return static_cast<long long>(std::llround(v.v));
        return std::stod(v.str());
    };
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"case", r.name}, {"kind", r.kind}, {"k", r.k}, {"params", r.params}, {"computed", num(r.computed)}};
        j["formula"] = r.formula ? num(*r.formula) : nlohmann::json(nullptr);
        j["match"] = r.match ? nlohmann::json(*r.match) : nlohmann::json(nullptr);
        out.push_back(std::move(j));
    }
    return out;
}

inline std::string logical_pairing_note() {
    return "logical pairing: X1=red/mu2 X2=blue/mu1 X3=blue/mu2 X4=red/mu1; Z1=blue/mu1 Z2=red/mu2 Z3=red/mu1 Z4=blue/mu2 (mu1 = horizontal)";
}

}  // namespace colex

#endif
