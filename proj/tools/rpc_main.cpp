// Command-line front end. Every subcommand reads or writes .secg graph files
// and prints one JSON document to stdout. Exit codes: 0 success, 1 coloring
// validation failure, 2 engine failure (search budget exhausted), 3 I/O,
// parse, or usage errors. Errors are reported as JSON on stderr.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "rpc/audit.hpp"
#include "rpc/clique.hpp"
#include "rpc/cycle.hpp"
#include "rpc/engine.hpp"
#include "rpc/generators.hpp"
#include "rpc/graph.hpp"
#include "rpc/oracle.hpp"
#include "rpc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitEngine = 2;
constexpr int kExitIo = 3;

struct CliError {
    int code;
    std::string kind;
    std::string message;
};

void print_json(const rpc::Json& j) { std::cout << j.dump(2) << "\n"; }

rpc::ColoredGraph load_graph(const std::string& path) {
    try {
        return rpc::read_secg_file(path);
    } catch (const std::exception& e) {
        throw CliError{kExitIo, "io", e.what()};
    }
}

// Engine and audit subcommands require a strongly colored input.
void require_strong(const rpc::ColoredGraph& g) {
    const auto report = rpc::validate_coloring(g);
    if (!report.strong()) {
        throw CliError{kExitValidation, "not-strong",
                       std::string("input coloring is ") + rpc::to_string(report.level)};
    }
}

std::pair<int, int> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CliError{kExitIo, "usage", "--pair expects two comma-separated vertex ids"};
    try {
        const int a = std::stoi(text.substr(0, comma));
        const int b = std::stoi(text.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw CliError{kExitIo, "usage", "--pair expects two comma-separated vertex ids"};
    }
}

// Defensive re-verification before anything cycle-shaped reaches stdout.
void check_emittable(const rpc::ColoredGraph& g, const std::vector<int>& cycle) {
    std::string why;
    if (!rpc::verify_rainbow_cycle(g, cycle, static_cast<int>(cycle.size()), {}, &why))
        throw CliError{kExitEngine, "internal", "refusing to emit a bad cycle: " + why};
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw CliError{kExitIo, "io", "cannot open " + path + " for writing"};
    out << text;
    if (!out.good()) throw CliError{kExitIo, "io", "write failed: " + path};
}

int run_validate(const std::string& file) {
    const auto g = load_graph(file);
    const auto report = rpc::validate_coloring(g);
    auto j = rpc::validation_json(report);
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["min_degree"] = g.vertex_count() > 0 ? g.min_degree() : 0;
    print_json(j);
    return report.strong() ? kExitOk : kExitValidation;
}

int run_find(const std::string& file, const std::string& pair_text, int length,
             long long node_budget, const std::string& dot_path) {
    const auto g = load_graph(file);
    require_strong(g);
    const auto [a, b] = parse_pair(pair_text);
    rpc::CycleSearch cs;
    try {
        cs = rpc::find_cycle_exact(g, a, b, length, node_budget);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitIo, "usage", e.what()};
    }
    rpc::Json out;
    out["schema"] = rpc::kSchema;
    out["pair"] = {a, b};
    out["length"] = length;
    switch (cs.outcome) {
        case rpc::SearchOutcome::Found: {
            check_emittable(g, cs.cycle);
            out["outcome"] = "found";
            out["cycle"] = rpc::cycle_json(g, cs.cycle);
            if (!dot_path.empty()) write_text_file(dot_path, rpc::write_dot(g, cs.cycle));
            print_json(out);
            return kExitOk;
        }
        case rpc::SearchOutcome::Exhausted:
            out["outcome"] = "impossible";
            print_json(out);
            return kExitOk;
        case rpc::SearchOutcome::Budget:
            out["outcome"] = "failed";
            out["nodes_expanded"] = cs.nodes_expanded;
            print_json(out);
            return kExitEngine;
    }
    return kExitEngine;
}

bool certificate_failed(const rpc::PancyclicCertificate& cert) {
    for (const auto& [length, st] : cert.status) {
        (void)length;
        if (st == rpc::LengthStatus::Failed) return true;
    }
    return false;
}

void check_certificate_cycles(const rpc::ColoredGraph& g, const rpc::PancyclicCertificate& cert) {
    for (const auto& [length, vs] : cert.cycles) {
        (void)length;
        check_emittable(g, vs);
    }
}

int run_pancyclic(const std::string& file, const std::string& pair_text, bool all_pairs,
                  int threads, long long node_budget) {
    const auto g = load_graph(file);
    require_strong(g);
    rpc::SearchLimits limits;
    limits.node_budget = node_budget;
    if (!all_pairs) {
        const auto [a, b] = parse_pair(pair_text);
        rpc::PancyclicCertificate cert;
        try {
            cert = rpc::pair_pancyclicity(g, a, b, limits);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitIo, "usage", e.what()};
        }
        check_certificate_cycles(g, cert);
        print_json(rpc::certificate_json(g, cert));
        return certificate_failed(cert) ? kExitEngine : kExitOk;
    }

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b) pairs.push_back({a, b});

    std::vector<rpc::PancyclicCertificate> certs(pairs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            certs[i] = rpc::pair_pancyclicity(g, pairs[i].first, pairs[i].second, limits);
    } else {
        // Fan pairs out round-robin; results land in pair order regardless.
        std::vector<std::future<void>> work;
        for (int t = 0; t < threads; ++t) {
            work.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t i = t; i < pairs.size(); i += threads)
                    certs[i] = rpc::pair_pancyclicity(g, pairs[i].first, pairs[i].second, limits);
            }));
        }
        for (auto& w : work) w.get();
    }

    bool failed = false;
    rpc::Json arr = rpc::Json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        check_certificate_cycles(g, certs[i]);
        arr.push_back(rpc::certificate_json(g, certs[i]));
        failed = failed || certificate_failed(certs[i]);
    }
    rpc::Json out;
    out["schema"] = rpc::kSchema;
    out["pairs"] = std::move(arr);
    print_json(out);
    return failed ? kExitEngine : kExitOk;
}

int run_audit(const std::string& file, const std::string& pair_text, long long node_budget) {
    const auto g = load_graph(file);
    require_strong(g);
    const auto [a, b] = parse_pair(pair_text);
    rpc::SearchLimits limits;
    limits.node_budget = node_budget;
    rpc::TrajectoryAudit tr;
    try {
        tr = rpc::audit_pair_trajectory(g, a, b, limits);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitIo, "usage", e.what()};
    }
    print_json(rpc::trajectory_json(g, tr));
    return certificate_failed(tr.certificate) ? kExitEngine : kExitOk;
}

int run_oracle(const std::string& file, const std::string& pair_text, int cap) {
    const auto g = load_graph(file);
    require_strong(g);
    const auto [a, b] = parse_pair(pair_text);
    rpc::OracleOptions opts;
    opts.vertex_cap = cap;
    std::map<int, rpc::Verdict> table;
    try {
        table = rpc::pancyclicity_table(g, a, b, opts);
    } catch (const std::exception& e) {
        throw CliError{kExitIo, "usage", e.what()};
    }
    print_json(rpc::oracle_table_json(a, b, table));
    return kExitOk;
}

int run_gen(const std::string& kind, int n, int target, unsigned long long seed, int l,
            const std::string& out_path) {
    rpc::Json params;
    const auto g = [&]() -> rpc::ColoredGraph {
        try {
            if (kind == "rainbow-complete") {
                params["n"] = n;
                return rpc::rainbow_complete(n);
            }
            if (kind == "random") {
                params["n"] = n;
                params["target_min_degree"] = target;
                params["seed"] = seed;
                return rpc::random_strong(n, target, seed);
            }
            if (kind == "cycle") {
                params["l"] = l;
                return rpc::cycle_instance(l);
            }
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitIo, "usage", e.what()};
        }
        throw CliError{kExitIo, "usage", "gen kind must be rainbow-complete, random, or cycle"};
    }();
    const auto report = rpc::validate_coloring(g);
    try {
        rpc::write_secg_file(g, out_path);
    } catch (const std::exception& e) {
        throw CliError{kExitIo, "io", e.what()};
    }
    rpc::Json manifest;
    manifest["schema"] = rpc::kSchema;
    manifest["generator"] = kind;
    manifest["params"] = std::move(params);
    manifest["file"] = out_path;
    manifest["vertices"] = g.vertex_count();
    manifest["edges"] = g.edge_count();
    manifest["min_degree"] = g.vertex_count() > 0 ? g.min_degree() : 0;
    manifest["level"] = rpc::to_string(report.level);
    write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    print_json(manifest);
    return report.strong() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow vertex pair-pancyclicity toolkit"};
    app.require_subcommand(1);

    std::string file;
    std::string pair_text;
    std::string dot_path;
    std::string out_path;
    std::string gen_kind;
    int length = 0;
    int threads = 1;
    int cap = 12;
    int n = 0;
    int target = 0;
    int cycle_l = 3;
    unsigned long long seed = 1;
    long long node_budget = 10'000'000;
    bool all_pairs = false;

    auto* validate = app.add_subcommand("validate", "check a .secg coloring");
    validate->add_option("file", file)->required();

    auto* find = app.add_subcommand("find", "one rainbow cycle of a given length through a pair");
    find->add_option("file", file)->required();
    find->add_option("--pair", pair_text, "a,b")->required();
    find->add_option("--length", length)->required();
    find->add_option("--node-budget", node_budget);
    find->add_option("--dot", dot_path, "write a DOT rendering of the found cycle");

    auto* pan = app.add_subcommand("pancyclic", "cycle statuses for every length through a pair");
    pan->add_option("file", file)->required();
    pan->add_option("--pair", pair_text, "a,b");
    pan->add_flag("--all-pairs", all_pairs);
    pan->add_option("--threads", threads);
    pan->add_option("--node-budget", node_budget);

    auto* audit = app.add_subcommand("audit", "counting checks along the whole search trajectory");
    audit->add_option("file", file)->required();
    audit->add_option("--pair", pair_text, "a,b")->required();
    audit->add_option("--node-budget", node_budget);

    auto* oracle = app.add_subcommand("oracle", "exhaustive per-length table (small graphs)");
    oracle->add_option("file", file)->required();
    oracle->add_option("--pair", pair_text, "a,b")->required();
    oracle->add_option("--cap", cap);

    auto* gen = app.add_subcommand("gen", "write a generated .secg instance plus manifest");
    gen->add_option("kind", gen_kind, "rainbow-complete | random | cycle")->required();
    gen->add_option("--n", n);
    gen->add_option("--target", target);
    gen->add_option("--seed", seed);
    gen->add_option("--l", cycle_l);
    gen->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // help text
        std::cerr << rpc::error_json("usage", e.what()).dump(2) << "\n";
        return kExitIo;
    }

    try {
        if (validate->parsed()) return run_validate(file);
        if (find->parsed()) return run_find(file, pair_text, length, node_budget, dot_path);
        if (pan->parsed()) {
            if (!all_pairs && pair_text.empty())
                throw CliError{kExitIo, "usage", "pancyclic needs --pair or --all-pairs"};
            return run_pancyclic(file, pair_text, all_pairs, threads, node_budget);
        }
        if (audit->parsed()) return run_audit(file, pair_text, node_budget);
        if (oracle->parsed()) return run_oracle(file, pair_text, cap);
        if (gen->parsed()) return run_gen(gen_kind, n, target, seed, cycle_l, out_path);
    } catch (const CliError& e) {
        std::cerr << rpc::error_json(e.kind, e.message).dump(2) << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << rpc::error_json("internal", e.what()).dump(2) << "\n";
        return kExitEngine;
    }
    return kExitIo;
}
