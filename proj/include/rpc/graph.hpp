// Edge-colored graph model: construction, coloring validation, degree and
// color queries, and the .secg text format.
#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rpc {

// (u, v, color); endpoints are normalized to u < v on construction.
using EdgeTriple = std::tuple<int, int, int>;

// Immutable simple undirected graph with one nonnegative color per edge.
// Vertices are 0..n-1. Colors are arbitrary nonnegative ints, not required
// to be contiguous.
class ColoredGraph {
public:
    static ColoredGraph from_edge_list(int n, const std::vector<EdgeTriple>& triples);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int edge_color(int u, int v) const;  // throws std::out_of_range if uv is not an edge
    int degree(int v) const;

    // Neighbors of v paired with the edge color, sorted by neighbor id.
    const std::vector<std::pair<int, int>>& adjacent(int v) const;

    // All edges sorted by (u, v), u < v.
    const std::vector<EdgeTriple>& edges() const { return edges_; }

    int min_degree() const;  // requires n >= 1
    std::vector<int> color_neighborhood(int v) const;  // sorted distinct colors at v
    std::vector<int> common_neighbors(int a, int b) const;

    bool operator==(const ColoredGraph&) const = default;

private:
    ColoredGraph() = default;

    int n_ = 0;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<EdgeTriple> edges_;
};

enum class ColoringLevel { NotProper, ProperOnly, Strong };

const char* to_string(ColoringLevel level);

// Witness is a path given by its vertices: 3 vertices when two edges at a
// common vertex share a color, 4 when a path on 4 vertices is not rainbow.
// Empty exactly when the coloring is strong.
struct ValidationReport {
    ColoringLevel level = ColoringLevel::Strong;
    std::vector<int> witness;
    std::vector<int> witness_colors;

    bool strong() const { return level == ColoringLevel::Strong; }
};

// Strong means: proper, and every path on 4 distinct vertices has three
// pairwise distinct edge colors.
ValidationReport validate_coloring(const ColoredGraph& g);

// .secg format: first line is the vertex count, then one "u v c" line per
// edge with u < v. Parse problems raise std::runtime_error.
ColoredGraph read_secg(std::istream& in);
ColoredGraph read_secg_file(const std::string& path);
void write_secg(const ColoredGraph& g, std::ostream& out);
void write_secg_file(const ColoredGraph& g, const std::string& path);

}  // namespace rpc
