// Cycles over a ColoredGraph: rainbow queries, arcs, and classification of
// edges against the cycle's color set.
#pragma once

#include <string>
#include <vector>

#include "rpc/graph.hpp"

namespace rpc {

enum class Direction { Forward, Backward };

// Relative to a cycle C: an edge is CColor when its color appears on C and
// Fresh otherwise.
enum class EdgeClass { CColor, Fresh };

class ColoredCycle {
public:
    // Placeholder only; real cycles come from new_checked.
    ColoredCycle() = default;

    // vs must hold >= 3 distinct in-range vertices, cyclically adjacent in g.
    static ColoredCycle new_checked(const ColoredGraph& g, std::vector<int> vs);

    int length() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }

    // edge_colors()[i] is the color of {vertices()[i], vertices()[(i+1) % l]}.
    const std::vector<int>& edge_colors() const { return edge_colors_; }
    const std::vector<int>& color_set() const { return color_set_; }  // sorted distinct

    bool is_rainbow() const { return static_cast<int>(color_set_.size()) == length(); }
    bool has_color(int c) const;
    bool contains(int v) const { return position_of(v) >= 0; }
    int position_of(int v) const;  // -1 if absent

    // Positions are 0-based indices into vertices(); endpoints included.
    // Forward walks i, i+1, ...; backward walks i, i-1, ...; all mod length.
    // arc(i, i, dir) is the single vertex at i.
    std::vector<int> arc(int i, int j, Direction dir) const;

    ColoredCycle rotated_to_front(int v) const;   // v must lie on the cycle
    ColoredCycle reversed_keeping_front() const;  // same start, opposite orientation

private:
    std::vector<int> vertices_;
    std::vector<int> edge_colors_;
    std::vector<int> color_set_;
    std::vector<int> position_;  // vertex id -> position, -1 when absent
};

// e = {u, v} must be an edge of g; the cycle only contributes its color set.
EdgeClass classify_edge(const ColoredGraph& g, const ColoredCycle& cyc, int u, int v);

// All fresh edges with one endpoint in a and the other in b, as (in a, in b)
// pairs sorted lexicographically. The vertex sets must be disjoint.
std::vector<std::pair<int, int>> fresh_edges_between(const ColoredGraph& g,
                                                     const ColoredCycle& cyc,
                                                     const std::vector<int>& a,
                                                     const std::vector<int>& b);

// Re-derives everything from the graph alone: expected length, distinct
// in-range vertices, cyclic adjacency, pairwise distinct edge colors, and
// membership of the listed vertices. Used before results are emitted.
bool verify_rainbow_cycle(const ColoredGraph& g, const std::vector<int>& vs, int expected_length,
                          const std::vector<int>& must_contain, std::string* why = nullptr);

}  // namespace rpc
