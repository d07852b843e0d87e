#include "rpc/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rpc {
namespace {

struct EnumState {
    const ColoredGraph& g;
    int length;
    bool rainbow;
    int require_a = -1;  // -1 disables the containment filter
    int require_b = -1;
    std::size_t limit;
    std::vector<std::vector<int>>& out;

    int anchor = 0;
    std::vector<int> path;
    std::vector<char> used;
    std::set<int> colors;

    bool full() const { return limit != 0 && out.size() >= limit; }

    // Grow the path with vertices above the anchor; every cycle is emitted
    // exactly once, at the anchor equal to its minimum vertex, oriented so
    // the second vertex is below the last.
    void dfs(int u) {
        if (full()) return;
        if (static_cast<int>(path.size()) == length) {
            if (!g.has_edge(u, anchor)) return;
            if (rainbow && colors.count(g.edge_color(u, anchor))) return;
            if (path[1] > path.back()) return;
            if (require_a >= 0 && !(used[require_a] && used[require_b])) return;
            out.push_back(path);
            return;
        }
        for (const auto& [v, c] : g.adjacent(u)) {
            if (v <= anchor || used[v]) continue;
            if (rainbow && colors.count(c)) continue;
            used[v] = 1;
            path.push_back(v);
            if (rainbow) colors.insert(c);
            dfs(v);
            if (rainbow) colors.erase(c);
            path.pop_back();
            used[v] = 0;
            if (full()) return;
        }
    }

    void run(int max_anchor) {
        used.assign(g.vertex_count(), 0);
        for (anchor = 0; anchor <= max_anchor && !full(); ++anchor) {
            path.assign(1, anchor);
            used[anchor] = 1;
            colors.clear();
            dfs(anchor);
            used[anchor] = 0;
        }
    }
};

void check_cap(const ColoredGraph& g, const OracleOptions& opts) {
    if (g.vertex_count() > opts.vertex_cap)
        throw std::invalid_argument("oracle: graph exceeds the vertex cap");
}

}  // namespace

std::vector<std::vector<int>> enumerate_rainbow_cycles(const ColoredGraph& g, int a, int b,
                                                       int length, std::size_t limit,
                                                       const OracleOptions& opts) {
    check_cap(g, opts);
    if (a == b || a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
        throw std::invalid_argument("oracle: invalid vertex pair");
    if (length < 3) throw std::invalid_argument("oracle: length must be at least 3");
    std::vector<std::vector<int>> out;
    if (length > g.vertex_count()) return out;
    EnumState st{g, length, true, a, b, limit, out, 0, {}, {}, {}};
    st.run(std::min(a, b));
    return out;
}

std::vector<std::vector<int>> enumerate_all_cycles(const ColoredGraph& g, int length,
                                                   std::size_t limit, const OracleOptions& opts) {
    check_cap(g, opts);
    if (length < 3) throw std::invalid_argument("oracle: length must be at least 3");
    std::vector<std::vector<int>> out;
    if (length > g.vertex_count()) return out;
    EnumState st{g, length, false, -1, -1, limit, out, 0, {}, {}, {}};
    st.run(g.vertex_count() - length);
    return out;
}

std::map<int, Verdict> pancyclicity_table(const ColoredGraph& g, int a, int b,
                                          const OracleOptions& opts) {
    std::map<int, Verdict> table;
    for (int length = 3; length <= g.vertex_count(); ++length) {
        const auto found = enumerate_rainbow_cycles(g, a, b, length, 1, opts);
        table[length] = found.empty() ? Verdict::Absent : Verdict::Present;
    }
    return table;
}

std::vector<int> canonical_cycle(const std::vector<int>& vs) {
    const int l = static_cast<int>(vs.size());
    if (l < 3) throw std::invalid_argument("canonical_cycle: needs at least 3 vertices");
    const int p = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    std::vector<int> out(l);
    for (int t = 0; t < l; ++t) out[t] = vs[(p + t) % l];
    if (out[1] > out.back()) std::reverse(out.begin() + 1, out.end());
    return out;
}

}  // namespace rpc
