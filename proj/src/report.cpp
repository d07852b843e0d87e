#include "rpc/report.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "rpc/cycle.hpp"

namespace rpc {

const char* to_string(Verdict v) {
    return v == Verdict::Present ? "present" : "absent";
}

Json cycle_json(const ColoredGraph& g, const std::vector<int>& vertices) {
    Json out;
    out["vertices"] = vertices;
    std::vector<int> colors;
    const int l = static_cast<int>(vertices.size());
    colors.reserve(l);
    for (int i = 0; i < l; ++i) colors.push_back(g.edge_color(vertices[i], vertices[(i + 1) % l]));
    out["colors"] = colors;
    out["rainbow"] = verify_rainbow_cycle(g, vertices, l, {});
    return out;
}

Json validation_json(const ValidationReport& report) {
    Json out;
    out["schema"] = kSchema;
    out["level"] = to_string(report.level);
    out["strong"] = report.strong();
    if (!report.witness.empty()) {
        out["witness"] = report.witness;
        out["witness_colors"] = report.witness_colors;
    }
    return out;
}

Json stats_json(const CountingStats& stats) {
    Json out;
    Json per = Json::array();
    for (const auto& cv : stats.per_vertex) {
        Json row;
        row["w"] = cv.w;
        row["fresh_to_cycle"] = cv.fresh_to_cycle;
        row["ccolor_to_cycle"] = cv.ccolor_to_cycle;
        row["fresh_to_remainder"] = cv.fresh_to_remainder;
        row["ccolor_to_remainder"] = cv.ccolor_to_remainder;
        row["blocked_subscripts"] = cv.blocked_subscripts;
        per.push_back(std::move(row));
    }
    out["per_vertex"] = std::move(per);
    out["sum_fresh_to_cycle"] = stats.sum_fresh_to_cycle;
    out["sum_ccolor_to_cycle"] = stats.sum_ccolor_to_cycle;
    out["sum_fresh_to_remainder"] = stats.sum_fresh_to_remainder;
    out["sum_ccolor_to_remainder"] = stats.sum_ccolor_to_remainder;
    out["remainder"] = stats.remainder;
    return out;
}

Json forbidden_json(const ForbiddenPair& fp) {
    Json out;
    out["kind"] = to_string(fp.kind);
    out["subscript_i"] = fp.subscript_i;
    out["subscript_j"] = fp.subscript_j;
    out["edge_i"] = {fp.edge_i.first, fp.edge_i.second};
    out["edge_j"] = {fp.edge_j.first, fp.edge_j.second};
    return out;
}

Json inequality_json(const InequalityCheck& check) {
    Json out;
    out["name"] = check.name;
    if (check.subject >= 0) out["subject"] = check.subject;
    out["lhs"] = check.lhs;
    out["rhs"] = check.rhs;
    out["holds"] = check.holds;
    out["vacuous"] = check.vacuous;
    if (check.witness) out["witness"] = forbidden_json(*check.witness);
    if (!check.note.empty()) out["note"] = check.note;
    return out;
}

Json decomposition_json(const PathDecomposition& d) {
    Json out;
    out["route"] = d.route == Direction::Forward ? "forward" : "backward";
    out["subscript_b"] = d.subscript_b;
    Json segs = Json::array();
    for (const auto& seg : d.segments) {
        Json row;
        row["chosen_subscript"] = seg.chosen_subscript;
        row["subscripts"] = seg.subscripts;
        row["vertices"] = seg.vertices;
        row["terminal_rule"] = seg.terminal_rule;
        row["fresh_edge_count"] = seg.fresh_edge_count;
        segs.push_back(std::move(row));
    }
    out["segments"] = std::move(segs);
    out["skipped_subscripts"] = d.skipped_subscripts;
    return out;
}

Json segment_report_json(const SegmentBoundReport& rep) {
    Json out;
    out["vacuous"] = rep.vacuous;
    if (rep.witness) out["witness"] = forbidden_json(*rep.witness);
    if (!rep.note.empty()) out["note"] = rep.note;
    if (!rep.vacuous) {
        out["forward"] = decomposition_json(rep.forward);
        out["backward"] = decomposition_json(rep.backward);
        Json checks = Json::array();
        for (const auto& c : rep.checks) checks.push_back(inequality_json(c));
        out["checks"] = std::move(checks);
        out["all_hold"] = rep.all_hold();
    }
    return out;
}

Json certificate_json(const ColoredGraph& g, const PancyclicCertificate& cert) {
    Json out;
    out["schema"] = kSchema;
    out["pair"] = {cert.a, cert.b};
    out["n"] = cert.n;
    out["l_min"] = cert.l_min;
    Json status;
    for (const auto& [length, st] : cert.status) status[std::to_string(length)] = to_string(st);
    out["status"] = std::move(status);
    Json cycles;
    for (const auto& [length, vs] : cert.cycles) cycles[std::to_string(length)] = cycle_json(g, vs);
    out["cycles"] = std::move(cycles);
    Json mech;
    for (const auto& [length, m] : cert.mechanisms) mech[std::to_string(length)] = m;
    out["mechanisms"] = std::move(mech);
    out["all_feasible_found"] = cert.all_feasible_found();
    return out;
}

Json audit_json(const ColoredGraph& g, const AuditReport& rep) {
    Json out;
    out["schema"] = kSchema;
    out["n"] = rep.n;
    out["l"] = rep.l;
    out["k"] = rep.k;
    out["min_degree"] = rep.min_degree;
    out["pair"] = {rep.a, rep.b};
    out["clique"] = rep.clique.vertices;
    out["stats"] = stats_json(rep.stats);
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(inequality_json(c));
    out["checks"] = std::move(checks);
    if (rep.forbidden) out["forbidden_pair"] = forbidden_json(*rep.forbidden);
    out["segment_bounds"] = segment_report_json(rep.segment_bounds);
    out["consistent"] = rep.consistent;
    out["conclusion"] = rep.conclusion;
    (void)g;
    return out;
}

Json trajectory_json(const ColoredGraph& g, const TrajectoryAudit& tr) {
    Json out;
    out["schema"] = kSchema;
    out["certificate"] = certificate_json(g, tr.certificate);
    Json steps = Json::array();
    for (const auto& step : tr.steps) {
        Json row;
        row["length"] = step.length;
        row["mechanism"] = step.mechanism;
        row["cycle"] = cycle_json(g, step.cycle);
        if (step.length < g.vertex_count()) {
            row["clique"] = step.clique.vertices;
            row["stats"] = stats_json(step.stats);
            Json checks = Json::array();
            for (const auto& c : step.checks) checks.push_back(inequality_json(c));
            row["checks"] = std::move(checks);
            if (step.forbidden) row["forbidden_pair"] = forbidden_json(*step.forbidden);
            row["segment_bounds"] = segment_report_json(step.segment_bounds);
        }
        steps.push_back(std::move(row));
    }
    out["steps"] = std::move(steps);
    if (tr.failure) out["failure"] = audit_json(g, *tr.failure);
    return out;
}

Json oracle_table_json(int a, int b, const std::map<int, Verdict>& table) {
    Json out;
    out["schema"] = kSchema;
    out["pair"] = {a, b};
    Json t;
    for (const auto& [length, v] : table) t[std::to_string(length)] = to_string(v);
    out["table"] = std::move(t);
    return out;
}

Json error_json(const std::string& kind, const std::string& message) {
    Json out;
    out["schema"] = kSchema;
    out["error"] = kind;
    out["message"] = message;
    return out;
}

std::string write_dot(const ColoredGraph& g, const std::vector<int>& cycle) {
    const int l = static_cast<int>(cycle.size());
    std::set<std::pair<int, int>> on_cycle;
    for (int i = 0; i < l; ++i) {
        int u = cycle[i];
        int v = cycle[(i + 1) % l];
        if (u > v) std::swap(u, v);
        on_cycle.insert({u, v});
    }
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const auto& [u, v, c] : g.edges()) {
        os << "  " << u << " -- " << v << " [label=\"" << c << "\"";
        if (on_cycle.count({u, v})) os << ", color=red, penwidth=2.0";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rpc
