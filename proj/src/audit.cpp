#include "rpc/audit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rpc {

const char* to_string(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::Type1: return "type1";
        case ForbiddenKind::Type2: return "type2";
    }
    return "?";
}

namespace {

int fresh_degree_to(const ColoredGraph& g, const ColoredCycle& cyc, int v,
                    const std::vector<int>& targets) {
    int count = 0;
    for (int t : targets) {
        if (t != v && g.has_edge(v, t) && !cyc.has_color(g.edge_color(v, t))) ++count;
    }
    return count;
}

// Positions of w's fresh cycle neighbors, as flags indexed by position.
std::vector<char> fresh_position_flags(const ColoredGraph& g, const ColoredCycle& cyc, int w) {
    std::vector<char> flags(cyc.length(), 0);
    for (const auto& [x, c] : g.adjacent(w)) {
        const int p = cyc.position_of(x);
        if (p >= 0 && !cyc.has_color(c)) flags[p] = 1;
    }
    return flags;
}

// The type-1 pair at the first cyclically consecutive fresh pair, if any.
std::optional<ForbiddenPair> consecutive_fresh_pair(const ColoredGraph& g, const ColoredCycle& cyc,
                                                    int w) {
    const auto flags = fresh_position_flags(g, cyc, w);
    const int l = cyc.length();
    for (int p = 0; p < l; ++p) {
        const int q = (p + 1) % l;
        if (!flags[p] || !flags[q]) continue;
        ForbiddenPair fp;
        fp.kind = ForbiddenKind::Type1;
        fp.subscript_i = p + 1;
        fp.subscript_j = p + 2;  // l+1 on the wrap, meaning v_1
        fp.edge_i = {cyc.vertices()[p], w};
        fp.edge_j = {cyc.vertices()[q], w};
        return fp;
    }
    return std::nullopt;
}

int reindexed_b_position(const ColoredCycle& cyc, int b) {
    const int p = cyc.position_of(b);
    if (p < 1 || p > cyc.length() - 2)
        throw std::invalid_argument("audit: cycle is not reindexed for the pair");
    return p;
}

struct RouteEntry {
    int subscript;
    int vertex;
    int fresh;
};

PathDecomposition run_decomposition(const std::vector<RouteEntry>& seq, int k, Direction route,
                                    int m) {
    PathDecomposition out;
    out.route = route;
    out.subscript_b = m;
    const int last = static_cast<int>(seq.size()) - 1;
    int cur = 0;
    while (cur <= last) {
        int d = cur;
        while (d <= last && seq[d].fresh == 0) ++d;
        for (int t = cur; t < d; ++t) out.skipped_subscripts.push_back(seq[t].subscript);
        if (d > last) break;
        PathSegment seg;
        seg.chosen_subscript = seq[d].subscript;
        int end;
        if (d + k >= last) {
            end = last;
            seg.terminal_rule = true;
        } else if (seq[d].fresh >= 2) {
            end = d + k;
        } else {
            end = d + k + 1;
        }
        for (int t = d; t <= end; ++t) {
            seg.subscripts.push_back(seq[t].subscript);
            seg.vertices.push_back(seq[t].vertex);
            seg.fresh_edge_count += seq[t].fresh;
        }
        out.segments.push_back(std::move(seg));
        cur = end + 1;
    }
    return out;
}

PathDecomposition decompose_route(const ColoredGraph& g, const ColoredCycle& cyc, int b,
                                  const RainbowClique& h, Direction route) {
    const int l = cyc.length();
    const int m = reindexed_b_position(cyc, b) + 1;
    std::vector<RouteEntry> seq;
    if (route == Direction::Forward) {
        for (int s = 1; s <= m; ++s) {
            const int v = cyc.vertices()[s - 1];
            seq.push_back({s, v, fresh_degree_to(g, cyc, v, h.vertices)});
        }
    } else {
        for (int s = l + 1; s >= m; --s) {
            const int v = cyc.vertices()[(s - 1) % l];
            seq.push_back({s, v, fresh_degree_to(g, cyc, v, h.vertices)});
        }
    }
    return run_decomposition(seq, h.k(), route, m);
}

long long decomposition_fresh_total(const PathDecomposition& d) {
    long long total = 0;
    for (const auto& seg : d.segments) total += seg.fresh_edge_count;
    return total;
}

}  // namespace

CountingStats compute_counting_stats(const ColoredGraph& g, const ColoredCycle& cyc,
                                     const RainbowClique& h) {
    CountingStats st;
    const int l = cyc.length();
    std::vector<char> in_clique(g.vertex_count(), 0);
    for (int w : h.vertices) in_clique[w] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!cyc.contains(v) && !in_clique[v]) st.remainder.push_back(v);
    }
    for (int w : h.vertices) {
        CliqueVertexStats cv;
        cv.w = w;
        std::set<int> blocked;
        for (const auto& [x, c] : g.adjacent(w)) {
            const int p = cyc.position_of(x);
            if (p >= 0) {
                if (cyc.has_color(c)) {
                    ++cv.ccolor_to_cycle;
                } else {
                    ++cv.fresh_to_cycle;
                    blocked.insert(p + 1);
                    blocked.insert((p + l - 1) % l + 1);
                }
            } else if (!in_clique[x]) {
                if (cyc.has_color(c)) ++cv.ccolor_to_remainder;
                else ++cv.fresh_to_remainder;
            }
        }
        cv.blocked_subscripts.assign(blocked.begin(), blocked.end());
        st.sum_fresh_to_cycle += cv.fresh_to_cycle;
        st.sum_ccolor_to_cycle += cv.ccolor_to_cycle;
        st.sum_fresh_to_remainder += cv.fresh_to_remainder;
        st.sum_ccolor_to_remainder += cv.ccolor_to_remainder;
        st.per_vertex.push_back(std::move(cv));
    }
    return st;
}

std::vector<InequalityCheck> check_external_fresh_bound(const ColoredGraph& g,
                                                        const ColoredCycle& cyc) {
    const int l = cyc.length();
    const long long bound = static_cast<long long>(g.min_degree()) - l + 1;
    std::vector<int> outside;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!cyc.contains(v)) outside.push_back(v);
    }
    std::vector<InequalityCheck> out;
    for (int p = 0; p < l; ++p) {
        const int v = cyc.vertices()[p];
        InequalityCheck c;
        c.name = "external-fresh-lower-bound";
        c.subject = v;
        c.lhs = bound;
        c.rhs = fresh_degree_to(g, cyc, v, outside);
        if (bound <= 0) {
            c.vacuous = true;
            c.note = "bound nonpositive";
        } else {
            c.holds = c.lhs <= c.rhs;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<InequalityCheck> check_cycle_color_budget(const ColoredCycle& cyc,
                                                      const CountingStats& stats) {
    std::vector<InequalityCheck> out;
    for (const auto& cv : stats.per_vertex) {
        InequalityCheck c;
        c.name = "cycle-color-budget";
        c.subject = cv.w;
        c.lhs = cv.fresh_to_cycle + 2LL * cv.ccolor_to_cycle + cv.ccolor_to_remainder;
        c.rhs = cyc.length();
        c.holds = c.lhs <= c.rhs;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<InequalityCheck> check_blocked_color_budget(const ColoredGraph& g,
                                                        const ColoredCycle& cyc,
                                                        const RainbowClique& h,
                                                        const CountingStats& stats) {
    std::vector<InequalityCheck> out;
    for (const auto& cv : stats.per_vertex) {
        InequalityCheck c;
        c.name = "blocked-color-budget";
        c.subject = cv.w;
        c.lhs = 2LL * cv.fresh_to_cycle + cv.ccolor_to_cycle + cv.ccolor_to_remainder;
        c.rhs = cyc.length();
        if (auto fp = consecutive_fresh_pair(g, cyc, cv.w)) {
            c.vacuous = true;
            c.witness = std::move(fp);
            c.note = "consecutive fresh neighbors; an insertion was available";
        } else {
            // With no consecutive fresh neighbors the blocked set has two
            // distinct edges per fresh neighbor.
            if (static_cast<long long>(cv.blocked_subscripts.size()) != 2LL * cv.fresh_to_cycle)
                throw std::logic_error("blocked subscript count disagrees with fresh neighbors");
            c.holds = c.lhs <= c.rhs;
        }
        out.push_back(std::move(c));
    }
    (void)h;
    return out;
}

std::vector<InequalityCheck> check_clique_incident_distinct(const ColoredGraph& g,
                                                            const ColoredCycle& cyc,
                                                            const RainbowClique& h) {
    std::vector<char> in_clique(g.vertex_count(), 0);
    for (int w : h.vertices) in_clique[w] = 1;
    std::map<int, int> color_count;
    long long ccolored = 0;
    for (int w : h.vertices) {
        for (const auto& [x, c] : g.adjacent(w)) {
            if (in_clique[x]) continue;
            ++color_count[c];
            if (cyc.has_color(c)) ++ccolored;
        }
    }
    long long collisions = 0;
    for (const auto& [c, cnt] : color_count) {
        (void)c;
        if (cnt > 1) collisions += cnt - 1;
    }
    InequalityCheck distinct;
    distinct.name = "clique-incident-distinct";
    distinct.lhs = collisions;
    distinct.rhs = 0;
    distinct.holds = collisions == 0;
    InequalityCheck cap;
    cap.name = "clique-ccolor-cap";
    cap.lhs = ccolored;
    cap.rhs = cyc.length();
    cap.holds = cap.lhs <= cap.rhs;
    std::vector<InequalityCheck> out;
    out.push_back(std::move(distinct));
    out.push_back(std::move(cap));
    return out;
}

PathDecomposition decompose_forward_path(const ColoredGraph& g, const ColoredCycle& cyc, int b,
                                         const RainbowClique& h) {
    return decompose_route(g, cyc, b, h, Direction::Forward);
}

PathDecomposition decompose_backward_path(const ColoredGraph& g, const ColoredCycle& cyc, int b,
                                          const RainbowClique& h) {
    return decompose_route(g, cyc, b, h, Direction::Backward);
}

ColoredCycle reindex_for_pair(const ColoredCycle& cyc, int a, int b) {
    if (a == b) throw std::invalid_argument("reindex: anchors must differ");
    if (cyc.position_of(a) < 0 || cyc.position_of(b) < 0)
        throw std::invalid_argument("reindex: anchors must lie on the cycle");
    ColoredCycle out = cyc.rotated_to_front(a);
    if (out.position_of(b) == out.length() - 1) out = out.reversed_keeping_front();
    return out;
}

std::optional<ForbiddenPair> find_forbidden_pair(const ColoredGraph& g, const ColoredCycle& cyc,
                                                 int b, const RainbowClique& h) {
    const int l = cyc.length();
    const int m = reindexed_b_position(cyc, b) + 1;
    const auto& vs = cyc.vertices();
    for (int w : h.vertices) {
        if (auto fp = consecutive_fresh_pair(g, cyc, w)) return fp;
    }
    const int k = h.k();
    for (int i = 1; i <= l; ++i) {
        const int vi = vs[i - 1];
        for (int gap = 2; gap <= k; ++gap) {
            const int j = i + gap;
            if (j > l + 1) break;
            if (i < m && m < j) continue;  // b would be cut out of the kept arc
            const int vj = vs[(j - 1) % l];
            for (int w1 : h.vertices) {
                if (!g.has_edge(vi, w1) || cyc.has_color(g.edge_color(vi, w1))) continue;
                for (int w2 : h.vertices) {
                    if (w2 == w1) continue;
                    if (!g.has_edge(vj, w2) || cyc.has_color(g.edge_color(vj, w2))) continue;
                    ForbiddenPair fp;
                    fp.kind = ForbiddenKind::Type2;
                    fp.subscript_i = i;
                    fp.subscript_j = j;
                    fp.edge_i = {vi, w1};
                    fp.edge_j = {vj, w2};
                    return fp;
                }
            }
        }
    }
    return std::nullopt;
}

bool SegmentBoundReport::all_hold() const {
    for (const auto& c : checks) {
        if (!c.vacuous && !c.holds) return false;
    }
    return true;
}

SegmentBoundReport check_segment_fresh_bounds(const ColoredGraph& g, const ColoredCycle& cyc,
                                              int a, int b, const RainbowClique& h) {
    if (cyc.position_of(a) != 0)
        throw std::invalid_argument("segment bounds: cycle must be reindexed to start at a");
    SegmentBoundReport rep;
    if (auto fp = find_forbidden_pair(g, cyc, b, h)) {
        rep.vacuous = true;
        rep.witness = std::move(fp);
        rep.note = "a forbidden pair exists; the extension machinery was not stuck";
        return rep;
    }
    const int k = h.k();
    if (k < 3) {
        rep.vacuous = true;
        rep.note = "clique smaller than 3; the segment bounds are not implied";
        return rep;
    }
    rep.forward = decompose_forward_path(g, cyc, b, h);
    rep.backward = decompose_backward_path(g, cyc, b, h);
    auto check_route = [&](const PathDecomposition& d, const char* name) {
        for (const auto& seg : d.segments) {
            const int sz = static_cast<int>(seg.vertices.size());
            InequalityCheck c;
            c.name = name;
            c.subject = seg.chosen_subscript;
            c.lhs = seg.fresh_edge_count;
            c.rhs = seg.terminal_rule ? (sz <= 2 ? k : k + 1) : sz - 1;
            c.holds = c.lhs <= c.rhs;
            rep.checks.push_back(std::move(c));
        }
    };
    check_route(rep.forward, "segment-fresh-bound-forward");
    check_route(rep.backward, "segment-fresh-bound-backward");
    return rep;
}

AuditReport audit_failure(const ColoredGraph& g, int a, int b, const ColoredCycle& cyc) {
    const int n = g.vertex_count();
    const int l = cyc.length();
    if (l >= n) throw std::invalid_argument("audit: the cycle already spans the graph");
    if (a == b || cyc.position_of(a) < 0 || cyc.position_of(b) < 0)
        throw std::invalid_argument("audit: anchors must be distinct cycle vertices");

    AuditReport rep;
    rep.n = n;
    rep.l = l;
    rep.a = a;
    rep.b = b;
    rep.min_degree = g.min_degree();
    rep.clique = find_maximal_fresh_clique(g, cyc);
    rep.k = rep.clique.k();
    rep.stats = compute_counting_stats(g, cyc, rep.clique);

    const long long delta = rep.min_degree;
    const long long k = rep.k;
    const long long sum_fresh_c = rep.stats.sum_fresh_to_cycle;
    const long long sum_ccolor_c = rep.stats.sum_ccolor_to_cycle;
    const long long sum_fresh_r = rep.stats.sum_fresh_to_remainder;
    const long long sum_ccolor_r = rep.stats.sum_ccolor_to_remainder;
    const bool threshold = 3 * delta >= 2LL * n + 3;

    auto add = [&](InequalityCheck c) { rep.checks.push_back(std::move(c)); };
    auto append = [&](std::vector<InequalityCheck> cs) {
        for (auto& c : cs) rep.checks.push_back(std::move(c));
    };

    append(check_external_fresh_bound(g, cyc));

    for (const auto& cv : rep.stats.per_vertex) {
        InequalityCheck id;
        id.name = "degree-partition-identity";
        id.subject = cv.w;
        id.lhs = cv.fresh_to_cycle + cv.ccolor_to_cycle + cv.fresh_to_remainder +
                 cv.ccolor_to_remainder + (k - 1);
        id.rhs = g.degree(cv.w);
        id.holds = id.lhs == id.rhs;
        add(std::move(id));

        InequalityCheck dl;
        dl.name = "degree-lower-bound";
        dl.subject = cv.w;
        dl.lhs = delta;
        dl.rhs = g.degree(cv.w);
        dl.holds = dl.lhs <= dl.rhs;
        add(std::move(dl));

        InequalityCheck rd;
        rd.name = "remainder-degree-cap";
        rd.subject = cv.w;
        rd.lhs = cv.fresh_to_remainder + cv.ccolor_to_remainder;
        rd.rhs = n - l - k;
        rd.holds = rd.lhs <= rd.rhs;
        add(std::move(rd));
    }

    append(check_cycle_color_budget(cyc, rep.stats));
    auto blocked = check_blocked_color_budget(g, cyc, rep.clique, rep.stats);
    std::optional<ForbiddenPair> type1_witness;
    for (const auto& c : blocked) {
        if (c.vacuous && !type1_witness) type1_witness = c.witness;
    }
    append(std::move(blocked));
    append(check_clique_incident_distinct(g, cyc, rep.clique));

    for (int r : rep.stats.remainder) {
        InequalityCheck c;
        c.name = "remainder-extension-cap";
        c.subject = r;
        c.lhs = fresh_degree_to(g, cyc, r, rep.clique.vertices);
        c.rhs = k - 1;
        c.holds = c.lhs <= c.rhs;
        add(std::move(c));
    }

    {
        InequalityCheck c;
        c.name = "combined-color-budget";
        c.lhs = 3 * sum_fresh_c + 3 * sum_ccolor_c + 3 * sum_ccolor_r + sum_fresh_r;
        c.rhs = k * (n + l - k);
        if (type1_witness) {
            c.vacuous = true;
            c.witness = type1_witness;
            c.note = "some clique vertex has consecutive fresh neighbors";
        } else {
            c.holds = c.lhs <= c.rhs;
        }
        add(std::move(c));
    }
    {
        InequalityCheck c;
        c.name = "remainder-fresh-cap";
        c.lhs = sum_fresh_r;
        c.rhs = (k - 1) * (n - l - k);
        c.holds = c.lhs <= c.rhs;
        add(std::move(c));
    }
    {
        InequalityCheck c;
        c.name = "degree-sum-cap";
        c.lhs = k * delta;
        c.rhs = sum_fresh_c + sum_ccolor_c + sum_fresh_r + sum_ccolor_r + k * (k - 1);
        c.holds = c.lhs <= c.rhs;
        add(std::move(c));
    }

    const auto reindexed = reindex_for_pair(cyc, a, b);
    rep.forbidden = find_forbidden_pair(g, reindexed, b, rep.clique);
    {
        InequalityCheck c;
        c.name = "no-forbidden-pair";
        c.lhs = rep.forbidden ? 1 : 0;
        c.rhs = 0;
        c.holds = !rep.forbidden;
        c.witness = rep.forbidden;
        add(std::move(c));
    }

    rep.segment_bounds = check_segment_fresh_bounds(g, reindexed, a, b, rep.clique);
    for (const auto& c : rep.segment_bounds.checks) rep.checks.push_back(c);

    {
        const auto fwd = decompose_forward_path(g, reindexed, b, rep.clique);
        const auto bwd = decompose_backward_path(g, reindexed, b, rep.clique);
        InequalityCheck c;
        c.name = "fresh-sum-decomposition";
        c.lhs = decomposition_fresh_total(fwd) + decomposition_fresh_total(bwd) -
                fresh_degree_to(g, cyc, a, rep.clique.vertices) -
                fresh_degree_to(g, cyc, b, rep.clique.vertices);
        c.rhs = sum_fresh_c;
        c.holds = c.lhs == c.rhs;
        add(std::move(c));
    }

    {
        InequalityCheck c;
        c.name = "length-lower-bound";
        c.lhs = 2 * delta - n + 2;
        c.rhs = l;
        c.holds = c.lhs <= c.rhs;
        add(std::move(c));
    }

    auto add_threshold = [&](const char* name, long long lhs, long long rhs) {
        InequalityCheck c;
        c.name = name;
        c.lhs = lhs;
        c.rhs = rhs;
        if (!threshold) {
            c.vacuous = true;
            c.note = "minimum degree below the 3*delta >= 2n+3 threshold";
        } else {
            c.holds = lhs <= rhs;
        }
        add(std::move(c));
    };
    add_threshold("length-threshold-bound", n + 12, 3LL * l);
    add_threshold("clique-size-bound", 3, k);
    add_threshold("fresh-sum-lower-bound", l + 1, sum_fresh_c);
    add_threshold("fresh-sum-upper-bound", sum_fresh_c, l + 2 * k - 4);

    {
        InequalityCheck c;
        c.name = "forced-degree-cap";
        c.lhs = 3 * delta;
        c.rhs = 2LL * n + 2;
        c.holds = c.lhs <= c.rhs;
        add(std::move(c));
    }

    rep.consistent = true;
    std::string first_violation;
    for (const auto& c : rep.checks) {
        if (!c.vacuous && !c.holds) {
            rep.consistent = false;
            if (first_violation.empty()) first_violation = c.name;
        }
    }
    if (rep.consistent) {
        rep.conclusion = "consistent: delta <= (2n+2)/3 chain satisfied";
    } else {
        std::ostringstream os;
        os << "ANOMALY: " << first_violation
           << " violated for a certified stuck configuration; the input is either not strongly "
              "colored or the absence certificate is wrong";
        rep.conclusion = os.str();
    }
    return rep;
}

TrajectoryAudit audit_pair_trajectory(const ColoredGraph& g, int a, int b,
                                      const SearchLimits& limits) {
    TrajectoryAudit out;
    out.certificate = pair_pancyclicity(g, a, b, limits);
    const int n = g.vertex_count();
    std::map<int, ColoredCycle> found;
    for (const auto& [length, st] : out.certificate.status) {
        if (st != LengthStatus::Found) continue;
        auto cyc = ColoredCycle::new_checked(g, out.certificate.cycles.at(length));
        TrajectoryStep step;
        step.length = length;
        step.mechanism = out.certificate.mechanisms.at(length);
        step.cycle = cyc.vertices();
        if (length < n) {
            step.clique = find_maximal_fresh_clique(g, cyc);
            step.stats = compute_counting_stats(g, cyc, step.clique);
            auto append = [&](std::vector<InequalityCheck> cs) {
                for (auto& c : cs) step.checks.push_back(std::move(c));
            };
            append(check_external_fresh_bound(g, cyc));
            append(check_cycle_color_budget(cyc, step.stats));
            append(check_blocked_color_budget(g, cyc, step.clique, step.stats));
            append(check_clique_incident_distinct(g, cyc, step.clique));
            const auto reindexed = reindex_for_pair(cyc, a, b);
            step.forbidden = find_forbidden_pair(g, reindexed, b, step.clique);
            step.segment_bounds = check_segment_fresh_bounds(g, reindexed, a, b, step.clique);
        }
        out.steps.push_back(std::move(step));
        found.emplace(length, std::move(cyc));
    }
    for (const auto& [length, st] : out.certificate.status) {
        if (st != LengthStatus::Impossible) continue;
        const auto prev = found.find(length - 1);
        if (prev == found.end()) continue;
        out.failure = audit_failure(g, a, b, prev->second);
        break;
    }
    return out;
}

}  // namespace rpc
