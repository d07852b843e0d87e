#include "rpc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rpc {

ColoredGraph ColoredGraph::from_edge_list(int n, const std::vector<EdgeTriple>& triples) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    ColoredGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});

    std::map<std::pair<int, int>, int> seen;
    for (const auto& [a, b, c] : triples) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")");
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (c < 0)
            throw std::invalid_argument("negative color on edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        auto key = std::minmax(a, b);
        if (!seen.emplace(key, c).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ")");
    }
    for (const auto& [key, c] : seen) {
        g.edges_.emplace_back(key.first, key.second, c);
        g.adj_[static_cast<size_t>(key.first)].emplace_back(key.second, c);
        g.adj_[static_cast<size_t>(key.second)].emplace_back(key.first, c);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
}

const std::vector<std::pair<int, int>>& ColoredGraph::adjacent(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return adj_[static_cast<size_t>(v)];
}

bool ColoredGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& row = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>(v, -1));
    return it != row.end() && it->first == v;
}

int ColoredGraph::edge_color(int u, int v) const {
    if (u >= 0 && u < n_) {
        const auto& row = adj_[static_cast<size_t>(u)];
        auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>(v, -1));
        if (it != row.end() && it->first == v) return it->second;
    }
    throw std::out_of_range("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

int ColoredGraph::degree(int v) const { return static_cast<int>(adjacent(v).size()); }

int ColoredGraph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree requires at least one vertex");
    size_t best = adj_[0].size();
    for (const auto& row : adj_) best = std::min(best, row.size());
    return static_cast<int>(best);
}

std::vector<int> ColoredGraph::color_neighborhood(int v) const {
    std::vector<int> cols;
    cols.reserve(adjacent(v).size());
    for (const auto& [u, c] : adjacent(v)) {
        (void)u;
        cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

std::vector<int> ColoredGraph::common_neighbors(int a, int b) const {
    const auto& ra = adjacent(a);
    const auto& rb = adjacent(b);
    std::vector<int> out;
    size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        if (ra[i].first < rb[j].first) {
            ++i;
        } else if (ra[i].first > rb[j].first) {
            ++j;
        } else {
            out.push_back(ra[i].first);
            ++i;
            ++j;
        }
    }
    return out;
}

const char* to_string(ColoringLevel level) {
    switch (level) {
        case ColoringLevel::NotProper: return "not-proper";
        case ColoringLevel::ProperOnly: return "proper-only";
        case ColoringLevel::Strong: return "strong";
    }
    return "?";
}

ValidationReport validate_coloring(const ColoredGraph& g) {
    // Proper: colors at each vertex pairwise distinct.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::map<int, int> first;  // color -> first neighbor carrying it
        for (const auto& [u, c] : g.adjacent(v)) {
            auto [it, inserted] = first.emplace(c, u);
            if (!inserted) return {ColoringLevel::NotProper, {it->second, v, u}, {c, c}};
        }
    }
    // Every path w-u-v-x on 4 distinct vertices must be rainbow. With the
    // middle edge fixed, scanning one orientation covers both (paths are
    // undirected).
    for (const auto& [u, v, cuv] : g.edges()) {
        for (const auto& [w, cwu] : g.adjacent(u)) {
            if (w == v) continue;
            for (const auto& [x, cvx] : g.adjacent(v)) {
                if (x == u || x == w) continue;
                if (cwu == cvx || cwu == cuv || cuv == cvx)
                    return {ColoringLevel::ProperOnly, {w, u, v, x}, {cwu, cuv, cvx}};
            }
        }
    }
    return {ColoringLevel::Strong, {}, {}};
}

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

ColoredGraph read_secg(std::istream& in) {
    std::string line;
    int n = -1;
    int lineno = 0;
    std::vector<EdgeTriple> triples;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n) || n < 0)
                throw std::runtime_error("secg line " + std::to_string(lineno) +
                                         ": expected vertex count");
            std::string extra;
            if (ss >> extra)
                throw std::runtime_error("secg line " + std::to_string(lineno) +
                                         ": trailing tokens after vertex count");
            continue;
        }
        int u, v, c;
        if (!(ss >> u >> v >> c))
            throw std::runtime_error("secg line " + std::to_string(lineno) +
                                     ": expected 'u v c'");
        std::string extra;
        if (ss >> extra)
            throw std::runtime_error("secg line " + std::to_string(lineno) + ": trailing tokens");
        if (u >= v)
            throw std::runtime_error("secg line " + std::to_string(lineno) +
                                     ": edges must satisfy u < v");
        triples.emplace_back(u, v, c);
    }
    if (n < 0) throw std::runtime_error("secg: empty input");
    try {
        return ColoredGraph::from_edge_list(n, triples);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("secg: ") + e.what());
    }
}

ColoredGraph read_secg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_secg(in);
}

void write_secg(const ColoredGraph& g, std::ostream& out) {
    out << g.vertex_count() << "\n";
    for (const auto& [u, v, c] : g.edges()) out << u << " " << v << " " << c << "\n";
}

void write_secg_file(const ColoredGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_secg(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rpc
