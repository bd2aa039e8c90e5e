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

#ifndef COLEX_CLI_HPP
#define COLEX_CLI_HPP

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "colex/io.hpp"
#include "colex/report.hpp"

namespace colex {

namespace cli_detail {

struct Options {
    std::string kind;
    std::vector<std::size_t> ks;
    std::string format = "table";
    std::string output;
    std::string lattice;
    std::string region;
    std::string region_file;
    std::string method = "auto";
    std::size_t label = 0;
    std::vector<std::size_t> pair;
    double alpha = 1.0;
    bool alpha_set = false;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    std::size_t R = 2, r = 1, gap = 1;
    std::vector<std::size_t> ns{1, 2};
};

inline std::vector<SurfaceKind> kinds_of(const std::string& s) {
    if (s == "both") return {SurfaceKind::TorusHex, SurfaceKind::TriangularPlanar};
    return {parse_kind(s)};
}

inline std::size_t single_k(const Options& o, std::size_t fallback) {
    if (o.ks.empty()) return fallback;
    if (o.ks.size() != 1) throw usage_error("this command takes a single --k");
    if (o.ks[0] < 1) throw usage_error("k must be ≥ 1");
    return o.ks[0];
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(path + ": " + e.what());
    }
}

struct Output {
    std::vector<Row> rows;
    std::vector<std::string> notes;
    nlohmann::json extra = nlohmann::json::object();
};

inline std::string render(const std::string& command, const Output& res, const std::string& format) {
    if (format == "csv") return format_csv(res.rows);
    if (format == "json") {
        nlohmann::json j = res.extra;
        j["command"] = command;
        j["rows"] = rows_to_json(res.rows);
        j["all_match"] = all_match(res.rows);
        if (!res.notes.empty()) j["notes"] = res.notes;
        return j.dump(2) + "\n";
    }
    return format_table(res.rows, res.notes);
}

inline StabilizerModel model_for(const Options& o, SurfaceKind kind, std::size_t k) {
    if (!o.lattice.empty()) return build_model(colex_from_json(read_json_file(o.lattice)));
    return build_model(build_colex(kind, k));
}

inline Output cmd_closed_forms(const Options& o) {
    Output res;
    std::vector<StabilizerModel> models;
    if (!o.lattice.empty()) {
        models.push_back(model_for(o, SurfaceKind::TorusHex, 0));
    } else {
        std::vector<std::size_t> ks = o.ks.empty() ? std::vector<std::size_t>{1, 2, 3} : o.ks;
        for (auto kind : kinds_of(o.kind.empty() ? "both" : o.kind))
            for (auto k : ks) models.push_back(build_model(build_colex(kind, k)));
    }
    bool torus = false;
    for (const auto& m : models) {
        torus = torus || m.colex->kind == SurfaceKind::TorusHex;
        auto rows = closed_form_rows(m, worker_count());
        res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    }
    if (torus) res.notes.push_back(logical_pairing_note());
    return res;
}

inline Output cmd_degeneracy(const Options& o) {
    Output res;
    std::vector<std::size_t> ks = o.ks.empty() ? std::vector<std::size_t>{1, 2, 3} : o.ks;
    for (auto kind : kinds_of(o.kind.empty() ? "both" : o.kind))
        for (auto k : ks) {
            auto rows = degeneracy_rows(build_model(build_colex(kind, k)));
            res.rows.insert(res.rows.end(), rows.begin(), rows.end());
        }
    res.notes.push_back(logical_pairing_note());
    return res;
}

inline Output cmd_entropy(const Options& o) {
    const SurfaceKind kind = parse_kind(o.kind.empty() ? "torus" : o.kind);
    auto s = model_for(o, kind, single_k(o, 1));
    const Colex& c = *s.colex;
    if (o.region.empty() == o.region_file.empty()) throw usage_error("give exactly one of --region or --region-file");
    Bipartition p = o.region.empty() ? region_from_json(read_json_file(o.region_file), c.vertices) : named_region(c, o.region);

    LogicalState state = LogicalState::basis(s.n_logicals(), o.label);
    const bool superposed = !o.pair.empty() || o.alpha_set;
    if (superposed) {
        if (o.pair.size() != 2) throw usage_error("--alpha needs --pair t0,t1");
        state = LogicalState::pair(s.n_logicals(), o.pair[0], o.pair[1], o.alpha);
    }
    state.check(s.n_logicals());

    EntropyReport rep;
    const std::string m = o.method;
    if (m == "oracle") {
        rep = oracle_entropy(s, state, p);
    } else if (m == "superposition" || (m == "auto" && superposed)) {
        rep = logical_superposition_entropy(s, state, p);
    } else if (superposed) {
        throw usage_error("method " + m + " only handles basis states");
    } else if (m == "auto" || m == "rank") {
        rep = entanglement_entropy(s, p);
    } else if (m == "counting") {
        rep = counting_entropy(s, p).first;
    } else {
        throw usage_error("unknown method " + m);
    }

    Output res;
    std::string params = "region=" + (o.region.empty() ? o.region_file : o.region) + ";method=" + method_name(rep.method);
    params += ";|A|=" + std::to_string(rep.a_size) + ";boundary=" + std::to_string(rep.boundary_size);
    if (superposed) params += ";pair=" + std::to_string(o.pair[0]) + "/" + std::to_string(o.pair[1]) + ";alpha=" + Value{o.alpha, false}.str();
    res.rows.push_back(Row{"entropy", kind_name(c.kind), c.k, params, std::nullopt, {rep.s_a, rep.exact()}, std::nullopt});
    res.extra["method"] = method_name(rep.method);
    res.extra["a_size"] = rep.a_size;
    res.extra["boundary_size"] = rep.boundary_size;
    return res;
}

inline Output cmd_tee(const Options& o) {
    const SurfaceKind kind = parse_kind(o.kind.empty() ? "torus" : o.kind);
    auto s = model_for(o, kind, single_k(o, kind == SurfaceKind::TorusHex ? 4 : 8));
    Output res;
    res.rows = tee_rows(s, o.R, o.r, o.gap);
    res.notes.push_back("s_topo = S1 - S2 - S3 + S4; gamma = -s_topo/2; D = 2^gamma");
    return res;
}

inline Output cmd_scaling(const Options& o) {
    auto s = model_for(o, parse_kind(o.kind.empty() ? "torus" : o.kind), single_k(o, 4));
    Output res;
    res.rows = scaling_rows(s, o.ns);
    res.notes.push_back("least-squares fit S = kappa * boundary - gamma over hex disks");
    return res;
}

inline Output cmd_oracle_check(const Options& o) {
    const SurfaceKind kind = parse_kind(o.kind.empty() ? "torus" : o.kind);
    auto s = model_for(o, kind, single_k(o, 1));
    Output res;
    res.rows = oracle_check_rows(s, o.samples, o.seed, worker_count());
    double worst = 0;
    for (const auto& r : res.rows) worst = std::max(worst, std::abs(r.computed.v - r.formula->v));
    res.notes.push_back("samples: " + std::to_string(o.samples) + ", seed: " + std::to_string(o.seed) + ", max deviation: " + Value{worst, false}.str());
    res.extra["max_deviation"] = std::stod(Value{worst, false}.str());
    return res;
}

inline Output cmd_build(const Options& o, std::string& document) {
    Colex c = o.lattice.empty() ? build_colex(parse_kind(o.kind.empty() ? "torus" : o.kind), single_k(o, 0))
                                : colex_from_json(read_json_file(o.lattice));
    auto v = validate_colex(c);
    Output res;
    auto count = [&](const char* name, std::size_t n) { res.rows.push_back(Row{name, kind_name(c.kind), c.k, "", std::nullopt, {double(n), true}, std::nullopt}); };
    count("vertices", c.vertices);
    count("edges", c.edges.size());
    count("faces", c.faces.size());
    res.rows.push_back(Row{"validation", kind_name(c.kind), c.k, "", Value{1, true}, {v.passed ? 1.0 : 0.0, true}, v.passed});
    for (const auto& f : v.failures) {
        std::string ids;
        for (auto id : f.ids) ids += " " + std::to_string(id);
        res.notes.push_back("validation failure: " + f.rule + (ids.empty() ? "" : " at" + ids));
    }
    if (o.format == "json") document = to_json(c).dump(2) + "\n";
    return res;
}

}  // namespace cli_detail

// Exit codes: 0 ok, 1 mismatch or failed validation, 2 usage or geometry error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Entanglement entropy of color-code ground states"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool multi_k) {
        sub->add_option("--kind", o.kind, multi_k ? "torus, triangular or both" : "torus or triangular")
            ->check(CLI::IsMember(multi_k ? std::vector<std::string>{"torus", "triangular", "both"} : std::vector<std::string>{"torus", "triangular"}));
        sub->add_option("--k", o.ks, multi_k ? "lattice sizes, comma separated" : "lattice size")->delimiter(',');
        sub->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--output,-o", o.output, "write to file instead of stdout");
    };
    auto lattice = [&](CLI::App* sub) { sub->add_option("--lattice", o.lattice, "lattice document to load instead of building one"); };

    auto* build = app.add_subcommand("build", "build a lattice and print its document");
    common(build, false);
    lattice(build);

    auto* entropy = app.add_subcommand("entropy", "entanglement entropy of one region");
    common(entropy, false);
    lattice(entropy);
    entropy->add_option("--region", o.region, "named region, e.g. colored_chain(red,1,0)");
    entropy->add_option("--region-file", o.region_file, "JSON list of vertex ids");
    entropy->add_option("--method", o.method, "auto, rank, counting, oracle or superposition")
        ->check(CLI::IsMember({"auto", "rank", "counting", "oracle", "superposition"}));
    entropy->add_option("--label", o.label, "logical basis label");
    entropy->add_option("--pair", o.pair, "two logical labels t0,t1")->delimiter(',');
    auto* alpha = entropy->add_option("--alpha", o.alpha, "weight of the first label")->check(CLI::Range(0.0, 1.0));

    auto* table = app.add_subcommand("paper-table", "closed-form entropies against computed values");
    common(table, true);
    lattice(table);

    auto* tee = app.add_subcommand("tee", "topological entanglement entropy from four regions");
    common(tee, false);
    tee->add_option("--R", o.R, "outer radius in faces");
    tee->add_option("--r", o.r, "inner radius in faces");
    tee->add_option("--gap", o.gap, "half-width of the cuts");

    auto* scaling = app.add_subcommand("scaling", "area-law fit over hex disks");
    common(scaling, false);
    scaling->add_option("--n", o.ns, "disk radii, comma separated")->delimiter(',');

    auto* oracle = app.add_subcommand("oracle-check", "rank formula against the dense oracle on random bipartitions");
    common(oracle, false);
    oracle->add_option("--samples,-N", o.samples, "number of bipartitions");
    oracle->add_option("--seed", o.seed, "RNG seed");

    auto* degen = app.add_subcommand("degeneracy", "encoded qubits and group orders");
    common(degen, true);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        o.alpha_set = alpha->count() > 0;
        std::string command = app.get_subcommands().front()->get_name();
        std::string document;
        Output res;
        if (command == "build") res = cmd_build(o, document);
        else if (command == "entropy") res = cmd_entropy(o);
        else if (command == "paper-table") res = cmd_closed_forms(o);
        else if (command == "tee") res = cmd_tee(o);
        else if (command == "scaling") res = cmd_scaling(o);
        else if (command == "oracle-check") res = cmd_oracle_check(o);
        else res = cmd_degeneracy(o);

        std::string text = document.empty() ? render(command, res, o.format) : document;
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream f(o.output);
            if (!f) throw usage_error("cannot write " + o.output);
            f << text;
        }
        if (!all_match(res.rows)) {
            err << "error: mismatch\n";
            for (const auto& n : res.notes)
                if (n.rfind("validation failure", 0) == 0) err << n << '\n';
            return 1;
        }
        return 0;
    } catch (const construction_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(std::move(args), out, err);
}

}  // namespace colex

#endif
