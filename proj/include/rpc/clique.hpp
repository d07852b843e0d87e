// Rainbow fresh cliques disjoint from a host cycle. Fresh means: every clique
// edge's color avoids the cycle's color set; rainbow means the clique edges
// are pairwise distinctly colored on top of that.
#pragma once

#include <string>
#include <vector>

#include "rpc/cycle.hpp"
#include "rpc/graph.hpp"

namespace rpc {

struct RainbowClique {
    std::vector<int> vertices;         // sorted
    std::vector<int> internal_colors;  // sorted, one per clique edge
    int k() const { return static_cast<int>(vertices.size()); }
};

// Greedy insertion over all vertices outside the cycle, in seed_order first
// and ascending id for the rest. A vertex joins when it is adjacent to every
// current member through fresh edges whose colors are distinct from each
// other and from the colors already inside the clique. Since a rejected
// vertex stays rejected as the clique grows, scanning every candidate once
// yields a maximal clique. Throws when the cycle already covers the graph.
RainbowClique find_maximal_fresh_clique(const ColoredGraph& g, const ColoredCycle& cyc,
                                        const std::vector<int>& seed_order = {});

// Re-derives the clique invariants from scratch and confirms no outside
// vertex can extend it.
bool verify_clique(const ColoredGraph& g, const ColoredCycle& cyc, const RainbowClique& h,
                   std::string* why = nullptr);

// True when no fresh edge from the cycle into the clique reuses a color that
// appears inside the clique. Holds automatically under a strong coloring.
bool fresh_colors_disjoint_check(const ColoredGraph& g, const ColoredCycle& cyc,
                                 const RainbowClique& h);

}  // namespace rpc
