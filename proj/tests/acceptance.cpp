// Acceptance gate: one line per criterion, PASS or FAIL with a reason.
// Exit code 0 only when every criterion passes.
// Usage: acceptance <path-to-cli-binary>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rpc/audit.hpp"
#include "rpc/engine.hpp"
#include "rpc/generators.hpp"
#include "rpc/oracle.hpp"
#include "test_util.hpp"

using rpc::ColoredCycle;
using rpc::ColoredGraph;
using rpc::LengthStatus;
using rpc::RainbowClique;
using rpc::Verdict;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// minimum degree floor demanded of the dense random family, by vertex count
int dense_target(int n) { return (2 * n + 2) / 3 + 1; }

ColoredGraph split_brain(int left, int right) {
    std::vector<rpc::EdgeTriple> t;
    int color = 0;
    for (int u = 0; u < left; ++u)
        for (int v = u + 1; v < left; ++v) t.push_back({u, v, color++});
    color = 100;
    for (int u = left; u < left + right; ++u)
        for (int v = u + 1; v < left + right; ++v) t.push_back({u, v, color++});
    return ColoredGraph::from_edge_list(left + right, t);
}

ColoredGraph complete_bipartite(int s) {
    std::vector<rpc::EdgeTriple> t;
    int color = 0;
    for (int u = 0; u < s; ++u)
        for (int v = s; v < 2 * s; ++v) t.push_back({u, v, color++});
    return ColoredGraph::from_edge_list(2 * s, t);
}

// rainbow l-ring plus a fresh all-distinct triangle, attached to the ring by
// a single fresh edge
ColoredGraph ring_with_triangle(int l, int attach) {
    std::vector<rpc::EdgeTriple> t;
    for (int i = 0; i < l; ++i) {
        const int u = i;
        const int v = (i + 1) % l;
        t.push_back({std::min(u, v), std::max(u, v), i});
    }
    t.push_back({l, l + 1, l + 10});
    t.push_back({l, l + 2, l + 11});
    t.push_back({l + 1, l + 2, l + 12});
    t.push_back({attach, l, l + 13});
    return ColoredGraph::from_edge_list(l + 3, t);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---- criterion 1: dense instances above the 2n/3 threshold are fully
// pair-pancyclic, every emitted cycle independently re-verified ----
bool dense_threshold_full_coverage(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    long long cycles_checked = 0;
    int instances = 0;
    for (int n = 9; n <= 13; ++n) {
        const int target = dense_target(n);
        for (int trial = 0; trial < 40; ++trial) {
            const unsigned long long seed = 1000ull * n + trial;
            const auto g = rpc::random_strong(n, target, seed);
            if (g.min_degree() < target) {
                detail = "generator missed its degree target";
                return false;
            }
            ++instances;
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    const auto cert = rpc::pair_pancyclicity(g, a, b);
                    if (!cert.all_feasible_found()) {
                        std::ostringstream os;
                        os << "n=" << n << " seed=" << seed << " pair=(" << a << "," << b
                           << ") left a gap";
                        detail = os.str();
                        return false;
                    }
                    for (const auto& [l, vs] : cert.cycles) {
                        if (static_cast<int>(vs.size()) != l ||
                            !testutil::rainbow_cycle_brute(g, vs) ||
                            std::find(vs.begin(), vs.end(), a) == vs.end() ||
                            std::find(vs.begin(), vs.end(), b) == vs.end()) {
                            detail = "emitted cycle failed independent re-verification";
                            return false;
                        }
                        ++cycles_checked;
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 600.0) {
        detail = "exceeded the 10 minute budget";
        return false;
    }
    std::ostringstream os;
    os << instances << " instances, " << cycles_checked << " cycles re-verified, " << std::fixed;
    os.precision(1);
    os << elapsed << "s";
    detail = os.str();
    return true;
}

// ---- criterion 2: on every small dense instance the engine's verdicts
// match the independent exhaustive enumeration exactly ----
bool engine_oracle_agreement(std::string& detail) {
    long long verdicts = 0;
    for (int n = 9; n <= 10; ++n) {
        const int target = dense_target(n);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = rpc::random_strong(n, target, 1000ull * n + trial);
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    const auto cert = rpc::pair_pancyclicity(g, a, b);
                    const auto table = rpc::pancyclicity_table(g, a, b);
                    for (const auto& [l, verdict] : table) {
                        const auto st = cert.status.at(l);
                        if (st == LengthStatus::Failed) {
                            detail = "engine gave up where the enumeration has an answer";
                            return false;
                        }
                        const bool engine_found = st == LengthStatus::Found;
                        if (engine_found != (verdict == Verdict::Present)) {
                            std::ostringstream os;
                            os << "n=" << n << " trial=" << trial << " pair=(" << a << "," << b
                               << ") length=" << l << " disagrees";
                            detail = os.str();
                            return false;
                        }
                        ++verdicts;
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << verdicts << " verdicts compared";
    detail = os.str();
    return true;
}

// ---- criterion 3: under a strong coloring every cycle on at most 5
// vertices is rainbow; under a merely proper one it need not be ----
bool short_cycles_auto_rainbow(std::string& detail) {
    long long cycles = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6 + trial % 5;
        const auto g = rpc::random_strong(n, 2 + trial % (n - 3), 500 + trial);
        for (int l = 3; l <= 5; ++l) {
            for (const auto& vs : rpc::enumerate_all_cycles(g, l)) {
                if (!testutil::rainbow_cycle_brute(g, vs)) {
                    detail = "a short cycle under a strong coloring repeated a color";
                    return false;
                }
                ++cycles;
            }
        }
    }
    if (cycles < 200) {
        detail = "sample produced too few short cycles to mean anything";
        return false;
    }
    // the alternating 2-colored square: proper, not strong, witness correct
    const auto c4 = ColoredGraph::from_edge_list(
        4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}});
    const auto rep = rpc::validate_coloring(c4);
    if (rep.level != rpc::ColoringLevel::ProperOnly || rep.witness.size() != 4) {
        detail = "alternating square not classified as proper-only with a 4-vertex witness";
        return false;
    }
    for (int i = 0; i < 3; ++i) {
        if (!c4.has_edge(rep.witness[i], rep.witness[i + 1]) ||
            c4.edge_color(rep.witness[i], rep.witness[i + 1]) != rep.witness_colors[i]) {
            detail = "witness path does not match the graph";
            return false;
        }
    }
    if (rep.witness_colors[0] != rep.witness_colors[1] &&
        rep.witness_colors[0] != rep.witness_colors[2] &&
        rep.witness_colors[1] != rep.witness_colors[2]) {
        detail = "witness path is rainbow, so it witnesses nothing";
        return false;
    }
    std::ostringstream os;
    os << cycles << " short cycles checked";
    detail = os.str();
    return true;
}

// one sampled configuration: a graph, a non-spanning rainbow cycle, and a
// maximal fresh clique outside it
struct Config {
    ColoredGraph g;
    ColoredCycle cyc;
    RainbowClique h;
    int a;
    int b;
};

// deterministic stream of varied configurations: dense random instances
// augmented with split and ring-attached families
std::vector<Config> sample_configs(std::size_t want) {
    std::vector<Config> out;
    unsigned long long seed = 1;
    while (out.size() < want) {
        // structured families every few rounds keep sparse shapes in the mix
        if (seed % 5 == 3) {
            const int left = 4 + static_cast<int>(seed % 4);
            const int right = 3 + static_cast<int>(seed % 3);
            auto g = split_brain(left, right);
            auto cyc = ColoredCycle::new_checked(g, [&] {
                std::vector<int> vs(left);
                for (int i = 0; i < left; ++i) vs[i] = i;
                return vs;
            }());
            auto h = rpc::find_maximal_fresh_clique(g, cyc);
            out.push_back({std::move(g), std::move(cyc), std::move(h), 0, 1});
        } else if (seed % 5 == 4) {
            const int l = 6 + static_cast<int>(seed % 6);
            const int attach = static_cast<int>(seed % l);
            auto g = ring_with_triangle(l, attach);
            auto cyc = ColoredCycle::new_checked(g, [&] {
                std::vector<int> vs(l);
                for (int i = 0; i < l; ++i) vs[i] = i;
                return vs;
            }());
            auto h = rpc::find_maximal_fresh_clique(g, cyc);
            const int b = 1 + static_cast<int>(seed % (l - 2));
            out.push_back({std::move(g), std::move(cyc), std::move(h), 0, b});
        } else {
            const int n = 8 + static_cast<int>(seed % 5);
            const int target = 3 + static_cast<int>(seed % (n - 4));
            const auto g = rpc::random_strong(n, target, 40000 + seed);
            const int a = 0;
            const int b = 1 + static_cast<int>(seed % (n - 1));
            const auto cert = rpc::pair_pancyclicity(g, a, b);
            for (const auto& [l, vs] : cert.cycles) {
                if (l >= n || out.size() >= want) continue;
                auto cyc = ColoredCycle::new_checked(g, vs);
                auto h = rpc::find_maximal_fresh_clique(g, cyc);
                out.push_back({g, std::move(cyc), std::move(h), a, b});
            }
        }
        ++seed;
    }
    return out;
}

// ---- criterion 4: bounds that hold on any strongly colored configuration,
// checked over a large sampled population ----
bool unconditional_bounds(std::string& detail) {
    const auto configs = sample_configs(1000);
    long long checks_run = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& cf = configs[i];
        const auto stats = rpc::compute_counting_stats(cf.g, cf.cyc, cf.h);
        std::vector<rpc::InequalityCheck> cs;
        for (auto& c : rpc::check_external_fresh_bound(cf.g, cf.cyc)) cs.push_back(c);
        for (auto& c : rpc::check_cycle_color_budget(cf.cyc, stats)) cs.push_back(c);
        for (auto& c : rpc::check_clique_incident_distinct(cf.g, cf.cyc, cf.h)) cs.push_back(c);
        for (const auto& c : cs) {
            if (!c.vacuous && !c.holds) {
                std::ostringstream os;
                os << "config " << i << ": " << c.name << " failed (" << c.lhs << " vs " << c.rhs
                   << ")";
                detail = os.str();
                return false;
            }
            if (!c.vacuous) ++checks_run;
        }
        if (!rpc::fresh_colors_disjoint_check(cf.g, cf.cyc, cf.h)) {
            std::ostringstream os;
            os << "config " << i << ": boundary fresh color reused inside the clique";
            detail = os.str();
            return false;
        }
    }
    std::ostringstream os;
    os << configs.size() << " configurations, " << checks_run << " live checks";
    detail = os.str();
    return true;
}

// ---- criterion 5: bounds conditional on no forbidden pair, with both the
// vacuous and the live branch exercised ----
bool conditional_bounds(std::string& detail) {
    const auto configs = sample_configs(1000);
    long long vacuous_configs = 0;
    long long live_configs = 0;
    long long live_segment_checks = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& cf = configs[i];
        const auto stats = rpc::compute_counting_stats(cf.g, cf.cyc, cf.h);
        const auto reindexed = rpc::reindex_for_pair(cf.cyc, cf.a, cf.b);
        const auto fp = rpc::find_forbidden_pair(cf.g, reindexed, cf.b, cf.h);
        const auto blocked = rpc::check_blocked_color_budget(cf.g, cf.cyc, cf.h, stats);
        const auto seg = rpc::check_segment_fresh_bounds(cf.g, reindexed, cf.a, cf.b, cf.h);
        if (fp.has_value()) {
            ++vacuous_configs;
            if (!seg.vacuous) {
                detail = "segment report ignored a forbidden pair";
                return false;
            }
            continue;
        }
        ++live_configs;
        // with no forbidden pair anywhere, no vertex has consecutive fresh
        // neighbors, so every per-vertex budget must be live and hold
        for (const auto& c : blocked) {
            if (c.vacuous || !c.holds) {
                std::ostringstream os;
                os << "config " << i << ": blocked budget " << (c.vacuous ? "vacuous" : "violated")
                   << " without a forbidden pair";
                detail = os.str();
                return false;
            }
        }
        if (seg.vacuous) {
            // only the small-clique hypothesis may fail here
            if (seg.witness.has_value() || cf.h.k() >= 3) {
                detail = "segment report vacuous for the wrong reason";
                return false;
            }
        } else {
            if (!seg.all_hold()) {
                std::ostringstream os;
                os << "config " << i << ": a segment bound failed";
                detail = os.str();
                return false;
            }
            live_segment_checks += static_cast<long long>(seg.checks.size());
        }
    }
    if (vacuous_configs == 0 || live_configs == 0) {
        detail = "sample failed to exercise both branches";
        return false;
    }
    std::ostringstream os;
    os << vacuous_configs << " vacuous / " << live_configs << " live configurations, "
       << live_segment_checks << " segment checks";
    detail = os.str();
    return true;
}

// ---- criterion 6: where the enumeration certifies absences below the
// degree threshold, the engine agrees honestly and the failure replay is
// arithmetically consistent ----
bool certified_absence_honesty(std::string& detail) {
    struct Instance {
        std::string name;
        ColoredGraph g;
        int a;
        int b;
    };
    std::vector<Instance> zoo;
    zoo.push_back({"split-5-4", split_brain(5, 4), 0, 1});
    zoo.push_back({"split-4-3", split_brain(4, 3), 0, 1});
    zoo.push_back({"split-4-4", split_brain(4, 4), 0, 1});
    zoo.push_back({"split-6-3", split_brain(6, 3), 0, 1});
    zoo.push_back({"split-6-4", split_brain(6, 4), 0, 1});
    zoo.push_back({"split-7-3", split_brain(7, 3), 0, 1});
    zoo.push_back({"split-5-5", split_brain(5, 5), 0, 1});
    zoo.push_back({"split-6-5", split_brain(6, 5), 0, 1});
    zoo.push_back({"bipartite-3", complete_bipartite(3), 0, 3});
    zoo.push_back({"bipartite-4", complete_bipartite(4), 0, 4});
    zoo.push_back({"bipartite-5", complete_bipartite(5), 0, 5});
    {
        // complete left component with a two-edge tail hanging off vertex 0
        std::vector<rpc::EdgeTriple> t;
        int color = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) t.push_back({u, v, color++});
        t.push_back({0, 5, 20});
        t.push_back({5, 6, 21});
        zoo.push_back({"tailed-5", ColoredGraph::from_edge_list(7, t), 0, 1});
    }
    {
        // complete bipartite 2 x 3
        std::vector<rpc::EdgeTriple> t;
        int color = 0;
        for (int u = 0; u < 2; ++u)
            for (int v = 2; v < 5; ++v) t.push_back({u, v, color++});
        zoo.push_back({"bipartite-2-3", ColoredGraph::from_edge_list(5, t), 0, 2});
    }

    int honest = 0;
    for (const auto& inst : zoo) {
        const int n = inst.g.vertex_count();
        if (3 * inst.g.min_degree() > 2 * n + 2) {
            detail = inst.name + " is not below the degree threshold";
            return false;
        }
        const auto tr = rpc::audit_pair_trajectory(inst.g, inst.a, inst.b);
        const auto table = rpc::pancyclicity_table(inst.g, inst.a, inst.b);
        int absences = 0;
        for (const auto& [l, verdict] : table) {
            const auto st = tr.certificate.status.at(l);
            if (st == LengthStatus::Failed) {
                detail = inst.name + " reported a budget failure instead of an answer";
                return false;
            }
            const bool engine_found = st == LengthStatus::Found;
            if (engine_found != (verdict == Verdict::Present)) {
                detail = inst.name + " disagrees with the enumeration";
                return false;
            }
            if (verdict == Verdict::Absent) ++absences;
        }
        if (absences == 0) {
            detail = inst.name + " has no certified absence, so it proves nothing";
            return false;
        }
        if (!tr.failure.has_value()) {
            detail = inst.name + " never replayed its first certified gap";
            return false;
        }
        if (!tr.failure->consistent ||
            tr.failure->conclusion != "consistent: delta <= (2n+2)/3 chain satisfied") {
            detail = inst.name + " failure replay: " + tr.failure->conclusion;
            return false;
        }
        ++honest;
    }
    if (honest < 10) {
        detail = "fewer than 10 certifying instances";
        return false;
    }
    std::ostringstream os;
    os << honest << " instances certified honestly";
    detail = os.str();
    return true;
}

// ---- criterion 7: a large dense instance is fully covered fast, with the
// cheap insertion move doing almost all of the work ----
bool large_instance_speed(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = rpc::rainbow_complete(40);
    const auto cert = rpc::pair_pancyclicity(g, 0, 1);
    const double elapsed = seconds_since(t0);
    if (!cert.all_feasible_found()) {
        detail = "left a gap on the complete graph";
        return false;
    }
    for (const auto& [l, vs] : cert.cycles) {
        if (!testutil::rainbow_cycle_brute(g, vs)) {
            detail = "emitted cycle failed independent re-verification";
            return false;
        }
    }
    if (elapsed >= 5.0) {
        std::ostringstream os;
        os << "took " << elapsed << "s, budget is 5s";
        detail = os.str();
        return false;
    }
    long long type1 = 0;
    long long other = 0;
    for (const auto& [l, m] : cert.mechanisms) {
        if (m == "type1") ++type1;
        else ++other;
    }
    if (type1 <= other) {
        std::ostringstream os;
        os << "insertion carried only " << type1 << " of " << (type1 + other) << " lengths";
        detail = os.str();
        return false;
    }
    std::ostringstream os;
    os << "38 lengths, insertion x" << type1 << ", " << std::fixed;
    os.precision(2);
    os << elapsed << "s";
    detail = os.str();
    return true;
}

// ---- criterion 8: identical command lines give byte-identical output ----
bool cli_determinism(const std::string& cli, std::string& detail) {
    if (cli.empty()) {
        detail = "no CLI binary path was provided";
        return false;
    }
    const std::vector<std::string> setups = {
        cli + " gen random --n 11 --target 8 --seed 77 --out acc_det.secg",
    };
    for (const auto& cmd : setups) {
        if (run(cmd).exit_code != 0) {
            detail = "setup command failed: " + cmd;
            return false;
        }
    }
    const auto first_file = slurp("acc_det.secg");
    if (run(setups[0]).exit_code != 0 || slurp("acc_det.secg") != first_file) {
        detail = "regenerating with the same seed changed the instance file";
        return false;
    }
    const std::vector<std::string> commands = {
        cli + " gen random --n 11 --target 8 --seed 78 --out acc_det2.secg",
        cli + " pancyclic acc_det.secg --pair 0,1",
        cli + " pancyclic acc_det.secg --all-pairs --threads 2",
        cli + " audit acc_det.secg --pair 2,9",
        cli + " oracle acc_det.secg --pair 0,1",
        cli + " find acc_det.secg --pair 0,1 --length 7",
    };
    for (const auto& cmd : commands) {
        const auto a = run(cmd);
        const auto b = run(cmd);
        if (a.exit_code != 0 || b.exit_code != 0) {
            detail = "command failed: " + cmd;
            return false;
        }
        if (a.out != b.out) {
            detail = "output differed between runs: " + cmd;
            return false;
        }
    }
    std::ostringstream os;
    os << commands.size() << " commands repeated byte-identically";
    detail = os.str();
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        bool passed;
        std::string detail;
    };
    std::vector<Criterion> results;
    auto gate = [&](const char* name, auto&& fn) {
        std::string detail;
        const bool ok = fn(detail);
        results.push_back({name, ok, detail});
        std::cout << (ok ? "PASS" : "FAIL") << " " << name;
        if (!detail.empty()) std::cout << (ok ? " (" : ": ") << detail << (ok ? ")" : "");
        std::cout << "\n" << std::flush;
    };

    gate("dense-threshold-full-coverage", [](std::string& d) { return dense_threshold_full_coverage(d); });
    gate("engine-oracle-agreement", [](std::string& d) { return engine_oracle_agreement(d); });
    gate("short-cycles-auto-rainbow", [](std::string& d) { return short_cycles_auto_rainbow(d); });
    gate("unconditional-bounds", [](std::string& d) { return unconditional_bounds(d); });
    gate("conditional-bounds", [](std::string& d) { return conditional_bounds(d); });
    gate("certified-absence-honesty", [](std::string& d) { return certified_absence_honesty(d); });
    gate("large-instance-speed", [](std::string& d) { return large_instance_speed(d); });
    gate("cli-determinism", [&cli](std::string& d) { return cli_determinism(cli, d); });

    int failures = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
