#include "rpc/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rpc {

const char* to_string(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::Type1: return "type1";
        case ExtensionKind::Type2: return "type2";
        case ExtensionKind::Fallback: return "fallback";
    }
    return "?";
}

const char* to_string(LengthStatus s) {
    switch (s) {
        case LengthStatus::Found: return "found";
        case LengthStatus::Impossible: return "impossible";
        case LengthStatus::Failed: return "failed";
    }
    return "?";
}

std::optional<ColoredCycle> seed_cycle(const ColoredGraph& g, int a, int b) {
    const int n = g.vertex_count();
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("seed: invalid vertex pair");
    if (g.has_edge(a, b)) {
        for (int x = 0; x < n; ++x) {
            if (x == a || x == b || !g.has_edge(a, x) || !g.has_edge(b, x)) continue;
            if (verify_rainbow_cycle(g, {a, b, x}, 3, {a, b}))
                return ColoredCycle::new_checked(g, {a, b, x});
        }
    }
    for (int x = 0; x < n; ++x) {
        if (x == a || x == b || !g.has_edge(a, x) || !g.has_edge(b, x)) continue;
        for (int y = x + 1; y < n; ++y) {
            if (y == a || y == b || !g.has_edge(a, y) || !g.has_edge(b, y)) continue;
            if (verify_rainbow_cycle(g, {a, x, b, y}, 4, {a, b}))
                return ColoredCycle::new_checked(g, {a, x, b, y});
        }
    }
    if (g.has_edge(a, b)) {
        // 4-cycles that keep the pair consecutive, a-b-x-y.
        for (int x = 0; x < n; ++x) {
            if (x == a || x == b || !g.has_edge(b, x)) continue;
            for (int y = 0; y < n; ++y) {
                if (y == a || y == b || y == x) continue;
                if (!g.has_edge(x, y) || !g.has_edge(y, a)) continue;
                if (verify_rainbow_cycle(g, {a, b, x, y}, 4, {a, b}))
                    return ColoredCycle::new_checked(g, {a, b, x, y});
            }
        }
    }
    return std::nullopt;
}

std::optional<Extension> find_type1(const ColoredGraph& g, const ColoredCycle& cyc) {
    const int l = cyc.length();
    const auto& vs = cyc.vertices();
    for (int i = 0; i < l; ++i) {
        const int u = vs[i];
        const int v = vs[(i + 1) % l];
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (cyc.contains(w)) continue;
            if (!g.has_edge(w, u) || !g.has_edge(w, v)) continue;
            const int cu = g.edge_color(w, u);
            const int cv = g.edge_color(w, v);
            if (cu == cv || cyc.has_color(cu) || cyc.has_color(cv)) continue;
            Extension ext;
            ext.kind = ExtensionKind::Type1;
            ext.inserted_vertices = {w};
            ext.splice_from = i;
            ext.splice_to = (i + 1) % l;
            ext.witness_edges = {{u, w}, {v, w}};
            ext.result_vertices.reserve(l + 1);
            for (int t = 0; t <= i; ++t) ext.result_vertices.push_back(vs[t]);
            ext.result_vertices.push_back(w);
            for (int t = i + 1; t < l; ++t) ext.result_vertices.push_back(vs[t]);
            std::string why;
            if (!verify_rainbow_cycle(g, ext.result_vertices, l + 1, {}, &why))
                throw std::logic_error("insertion produced a bad cycle: " + why);
            return ext;
        }
    }
    return std::nullopt;
}

std::optional<Extension> find_type2(const ColoredGraph& g, const ColoredCycle& cyc, int a, int b,
                                    const RainbowClique& h) {
    const int l = cyc.length();
    const int k = h.k();
    const auto& vs = cyc.vertices();
    const int pa = cyc.position_of(a);
    const int pb = cyc.position_of(b);
    if (pa < 0 || pb < 0) throw std::invalid_argument("splice: anchors must lie on the cycle");
    const int max_gap = std::min(k, l - 1);
    for (int i = 0; i < l; ++i) {
        for (int gap = 2; gap <= max_gap; ++gap) {
            const int j = (i + gap) % l;
            bool anchors_clear = true;
            for (int t = 1; t < gap; ++t) {
                const int p = (i + t) % l;
                if (p == pa || p == pb) {
                    anchors_clear = false;
                    break;
                }
            }
            if (!anchors_clear) continue;
            for (int w1 : h.vertices) {
                if (!g.has_edge(vs[i], w1)) continue;
                if (cyc.has_color(g.edge_color(vs[i], w1))) continue;
                for (int w2 : h.vertices) {
                    if (w2 == w1) continue;
                    if (!g.has_edge(vs[j], w2)) continue;
                    if (cyc.has_color(g.edge_color(vs[j], w2))) continue;
                    std::vector<int> mids;
                    for (int m : h.vertices) {
                        if (static_cast<int>(mids.size()) == gap - 2) break;
                        if (m != w1 && m != w2) mids.push_back(m);
                    }
                    Extension ext;
                    ext.kind = ExtensionKind::Type2;
                    ext.splice_from = i;
                    ext.splice_to = j;
                    ext.witness_edges = {{vs[i], w1}, {vs[j], w2}};
                    ext.inserted_vertices.push_back(w1);
                    ext.inserted_vertices.insert(ext.inserted_vertices.end(), mids.begin(),
                                                 mids.end());
                    ext.inserted_vertices.push_back(w2);
                    ext.result_vertices = cyc.arc(j, i, Direction::Forward);
                    ext.result_vertices.insert(ext.result_vertices.end(),
                                               ext.inserted_vertices.begin(),
                                               ext.inserted_vertices.end());
                    if (!verify_rainbow_cycle(g, ext.result_vertices, l + 1, {a, b})) continue;
                    return ext;
                }
            }
        }
    }
    return std::nullopt;
}

ColoredCycle apply_extension(const ColoredGraph& g, const ColoredCycle& cyc, const Extension& ext) {
    auto next = ColoredCycle::new_checked(g, ext.result_vertices);
    if (next.length() != cyc.length() + 1) throw std::logic_error("extension has the wrong length");
    if (!next.is_rainbow()) throw std::logic_error("extension is not rainbow");
    return next;
}

namespace {

struct ExactSearch {
    const ColoredGraph& g;
    int b;
    int length;
    long long budget;
    long long nodes = 0;
    bool aborted = false;
    std::vector<int> path;
    std::vector<char> used;
    std::set<int> colors;

    bool dfs(int u) {
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        const int depth = static_cast<int>(path.size());
        if (depth == length) {
            const int start = path[0];
            if (!g.has_edge(u, start)) return false;
            if (colors.count(g.edge_color(u, start))) return false;
            return used[b] != 0;
        }
        const bool last_slot = depth + 1 == length;
        for (const auto& [v, c] : g.adjacent(u)) {
            if (used[v] || colors.count(c)) continue;
            if (last_slot && !used[b] && v != b) continue;
            used[v] = 1;
            path.push_back(v);
            colors.insert(c);
            if (dfs(v)) return true;
            colors.erase(c);
            path.pop_back();
            used[v] = 0;
            if (aborted) return false;
        }
        return false;
    }
};

}  // namespace

CycleSearch find_cycle_exact(const ColoredGraph& g, int a, int b, int length, long long budget) {
    if (a == b || a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
        throw std::invalid_argument("search: invalid vertex pair");
    if (length < 3) throw std::invalid_argument("search: length must be at least 3");
    CycleSearch out;
    if (length > g.vertex_count()) return out;  // Exhausted: nothing that long exists
    ExactSearch st{g, b, length, budget, 0, false, {}, {}, {}};
    st.used.assign(g.vertex_count(), 0);
    st.path.push_back(a);
    st.used[a] = 1;
    const bool found = st.dfs(a);
    out.nodes_expanded = st.nodes;
    if (found) {
        out.outcome = SearchOutcome::Found;
        out.cycle = st.path;
    } else {
        out.outcome = st.aborted ? SearchOutcome::Budget : SearchOutcome::Exhausted;
    }
    return out;
}

ExtendResult extend_once(const ColoredGraph& g, const ColoredCycle& cyc, int a, int b,
                         const SearchLimits& limits) {
    if (cyc.length() >= g.vertex_count())
        throw std::invalid_argument("extend: cycle already spans the graph");
    ExtendResult res;
    if (auto ext = find_type1(g, cyc)) {
        res.status = ExtendStatus::Extended;
        res.extension = std::move(ext);
        return res;
    }

    std::vector<int> outside;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!cyc.contains(v)) outside.push_back(v);
    }
    const int m = static_cast<int>(outside.size());
    const int rotations = limits.clique_retries > 0 ? std::min(limits.clique_retries, m) : m;
    std::set<std::vector<int>> seen;
    for (int r = 0; r < rotations; ++r) {
        std::vector<int> seed(outside.begin() + r, outside.end());
        seed.insert(seed.end(), outside.begin(), outside.begin() + r);
        auto h = find_maximal_fresh_clique(g, cyc, seed);
        if (!seen.insert(h.vertices).second) continue;
        if (auto ext = find_type2(g, cyc, a, b, h)) {
            res.status = ExtendStatus::Extended;
            res.extension = std::move(ext);
            return res;
        }
    }

    auto cs = find_cycle_exact(g, a, b, cyc.length() + 1, limits.node_budget);
    res.nodes_expanded = cs.nodes_expanded;
    switch (cs.outcome) {
        case SearchOutcome::Found: {
            Extension ext;
            ext.kind = ExtensionKind::Fallback;
            ext.result_vertices = std::move(cs.cycle);
            res.status = ExtendStatus::Extended;
            res.extension = std::move(ext);
            break;
        }
        case SearchOutcome::Exhausted:
            res.status = ExtendStatus::CertifiedAbsent;
            break;
        case SearchOutcome::Budget:
            res.status = ExtendStatus::BudgetExhausted;
            break;
    }
    return res;
}

bool PancyclicCertificate::all_feasible_found() const {
    for (int length = l_min; length <= n; ++length) {
        const auto it = status.find(length);
        if (it == status.end() || it->second != LengthStatus::Found) return false;
    }
    return true;
}

PancyclicCertificate pair_pancyclicity(const ColoredGraph& g, int a, int b,
                                       const SearchLimits& limits) {
    if (a == b || a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
        throw std::invalid_argument("pancyclicity: invalid vertex pair");
    const int n = g.vertex_count();
    PancyclicCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.n = n;
    cert.l_min = g.has_edge(a, b) ? 3 : 4;
    if (cert.l_min == 4 && n >= 3) cert.status[3] = LengthStatus::Impossible;

    auto record_direct = [&](int length, const char* mechanism) {
        const auto cs = find_cycle_exact(g, a, b, length, limits.node_budget);
        switch (cs.outcome) {
            case SearchOutcome::Found:
                cert.status[length] = LengthStatus::Found;
                cert.cycles[length] = cs.cycle;
                cert.mechanisms[length] = mechanism;
                return std::optional<ColoredCycle>(ColoredCycle::new_checked(g, cs.cycle));
            case SearchOutcome::Exhausted: cert.status[length] = LengthStatus::Impossible; break;
            case SearchOutcome::Budget: cert.status[length] = LengthStatus::Failed; break;
        }
        return std::optional<ColoredCycle>();
    };

    if (n <= 8) {
        for (int length = cert.l_min; length <= n; ++length) record_direct(length, "direct");
        return cert;
    }

    std::optional<ColoredCycle> cur;
    bool seeded = false;
    for (int length = cert.l_min; length <= n; ++length) {
        if (cur && cur->length() == length - 1) {
            const auto res = extend_once(g, *cur, a, b, limits);
            switch (res.status) {
                case ExtendStatus::Extended:
                    cur = apply_extension(g, *cur, *res.extension);
                    cert.status[length] = LengthStatus::Found;
                    cert.cycles[length] = cur->vertices();
                    cert.mechanisms[length] = to_string(res.extension->kind);
                    break;
                case ExtendStatus::CertifiedAbsent:
                    cert.status[length] = LengthStatus::Impossible;
                    cur.reset();
                    break;
                case ExtendStatus::BudgetExhausted:
                    cert.status[length] = LengthStatus::Failed;
                    cur.reset();
                    break;
            }
        } else {
            cur = record_direct(length, seeded ? "direct" : "seed");
            if (cur) seeded = true;
        }
    }
    return cert;
}

}  // namespace rpc
