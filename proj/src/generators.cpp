#include "rpc/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace rpc {
namespace {

// Unbiased draw from [0, n) by rejection; avoids std::uniform_int_distribution
// whose mapping is implementation-defined.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
}

// Smallest color absent from the strong-coloring forbidden set of {u, v}:
// every color already placed on an edge touching N(u) or N(v). That blocks
// both same-color adjacency and any non-rainbow path on 4 vertices through
// the new edge, so the invariant "all placed edges strongly colored" is
// maintained edge by edge.
int pick_strong_color(const std::vector<std::set<int>>& adj,
                      const std::vector<std::vector<std::pair<int, int>>>& colored_adj, int u,
                      int v) {
    std::set<int> ball{u, v};
    ball.insert(adj[u].begin(), adj[u].end());
    ball.insert(adj[v].begin(), adj[v].end());
    std::set<int> forbidden;
    for (int w : ball) {
        for (const auto& [x, c] : colored_adj[w]) {
            (void)x;
            forbidden.insert(c);
        }
    }
    int c = 0;
    while (forbidden.count(c)) ++c;
    return c;
}

ColoredGraph strong_color_edges(int n, const std::set<std::pair<int, int>>& edge_set,
                                const std::vector<std::pair<int, int>>& order) {
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : edge_set) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<std::vector<std::pair<int, int>>> colored_adj(n);
    std::vector<EdgeTriple> triples;
    triples.reserve(order.size());
    for (const auto& [u, v] : order) {
        const int c = pick_strong_color(adj, colored_adj, u, v);
        colored_adj[u].emplace_back(v, c);
        colored_adj[v].emplace_back(u, c);
        triples.emplace_back(u, v, c);
    }
    return ColoredGraph::from_edge_list(n, triples);
}

}  // namespace

ColoredGraph rainbow_complete(int n) {
    if (n < 1) throw std::invalid_argument("rainbow_complete: n must be positive");
    std::vector<EdgeTriple> triples;
    int c = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) triples.emplace_back(u, v, c++);
    }
    return ColoredGraph::from_edge_list(n, triples);
}

ColoredGraph random_strong(int n, int target, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_strong: n must be at least 2");
    if (target < 0 || target >= n) throw std::invalid_argument("random_strong: need 0 <= target < n");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    const double p = static_cast<double>(target) / (n - 1);
    std::set<std::pair<int, int>> edge_set;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (unit(rng) < p) {
                edge_set.insert({u, v});
                ++deg[u];
                ++deg[v];
            }
        }
    }
    // Augment deficient vertices toward random non-neighbors.
    for (int u = 0; u < n; ++u) {
        while (deg[u] < target) {
            std::vector<int> candidates;
            for (int v = 0; v < n; ++v) {
                if (v == u) continue;
                if (!edge_set.count({std::min(u, v), std::max(u, v)})) candidates.push_back(v);
            }
            const int v = candidates[bounded(rng, candidates.size())];
            edge_set.insert({std::min(u, v), std::max(u, v)});
            ++deg[u];
            ++deg[v];
        }
    }

    std::vector<std::pair<int, int>> order(edge_set.begin(), edge_set.end());
    shuffle_vec(order, rng);
    return strong_color_edges(n, edge_set, order);
}

ColoredGraph cycle_instance(int l) {
    if (l < 3) throw std::invalid_argument("cycle_instance: l must be at least 3");
    std::set<std::pair<int, int>> edge_set;
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i + 1 < l; ++i) {
        edge_set.insert({i, i + 1});
        order.emplace_back(i, i + 1);
    }
    edge_set.insert({0, l - 1});
    order.emplace_back(0, l - 1);
    return strong_color_edges(l, edge_set, order);
}

}  // namespace rpc
