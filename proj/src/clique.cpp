#include "rpc/clique.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rpc {
namespace {

// Colors the candidate would add: one fresh edge to each clique member, all
// distinct and disjoint from the colors already inside. Empty optional-style
// return via bool; colors written into out on success.
bool joining_colors(const ColoredGraph& g, const ColoredCycle& cyc, const std::vector<int>& members,
                    const std::set<int>& internal, int cand, std::vector<int>* out) {
    std::set<int> added;
    for (int m : members) {
        if (!g.has_edge(cand, m)) return false;
        const int c = g.edge_color(cand, m);
        if (cyc.has_color(c)) return false;
        if (internal.count(c) || !added.insert(c).second) return false;
    }
    if (out) out->assign(added.begin(), added.end());
    return true;
}

}  // namespace

RainbowClique find_maximal_fresh_clique(const ColoredGraph& g, const ColoredCycle& cyc,
                                        const std::vector<int>& seed_order) {
    std::vector<int> order;
    std::vector<char> queued(g.vertex_count(), 0);
    for (int v : seed_order) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("clique: seed out of range");
        if (cyc.contains(v) || queued[v]) continue;
        queued[v] = 1;
        order.push_back(v);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (cyc.contains(v) || queued[v]) continue;
        order.push_back(v);
    }
    if (order.empty()) throw std::invalid_argument("clique: no vertex outside the cycle");

    std::vector<int> members;
    std::set<int> internal;
    for (int cand : order) {
        std::vector<int> cols;
        if (!joining_colors(g, cyc, members, internal, cand, &cols)) continue;
        members.push_back(cand);
        internal.insert(cols.begin(), cols.end());
    }
    RainbowClique h;
    h.vertices = std::move(members);
    std::sort(h.vertices.begin(), h.vertices.end());
    h.internal_colors.assign(internal.begin(), internal.end());
    return h;
}

bool verify_clique(const ColoredGraph& g, const ColoredCycle& cyc, const RainbowClique& h,
                   std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (h.vertices.empty()) return fail("empty clique");
    std::set<int> members(h.vertices.begin(), h.vertices.end());
    if (members.size() != h.vertices.size()) return fail("repeated vertex");
    std::set<int> internal;
    for (int v : h.vertices) {
        if (v < 0 || v >= g.vertex_count()) return fail("vertex out of range");
        if (cyc.contains(v)) return fail("vertex lies on the cycle");
    }
    for (size_t i = 0; i < h.vertices.size(); ++i) {
        for (size_t j = i + 1; j < h.vertices.size(); ++j) {
            const int u = h.vertices[i];
            const int v = h.vertices[j];
            if (!g.has_edge(u, v)) return fail("missing clique edge");
            const int c = g.edge_color(u, v);
            if (cyc.has_color(c)) return fail("clique edge reuses a cycle color");
            if (!internal.insert(c).second) return fail("repeated internal color");
        }
    }
    std::vector<int> expected(internal.begin(), internal.end());
    if (expected != h.internal_colors) return fail("internal color list mismatch");
    for (int cand = 0; cand < g.vertex_count(); ++cand) {
        if (cyc.contains(cand) || members.count(cand)) continue;
        if (joining_colors(g, cyc, h.vertices, internal, cand, nullptr))
            return fail("clique is extendable, not maximal");
    }
    return true;
}

bool fresh_colors_disjoint_check(const ColoredGraph& g, const ColoredCycle& cyc,
                                 const RainbowClique& h) {
    std::set<int> internal(h.internal_colors.begin(), h.internal_colors.end());
    for (const auto& [u, v] : fresh_edges_between(g, cyc, cyc.vertices(), h.vertices)) {
        if (internal.count(g.edge_color(u, v))) return false;
    }
    return true;
}

}  // namespace rpc
