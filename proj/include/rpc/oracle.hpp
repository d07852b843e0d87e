// Exhaustive reference enumeration, deliberately independent of the search
// engine: different traversal, no pruning beyond canonicity and the rainbow
// filter. Intended for small instances; guarded by a hard vertex cap.
#pragma once

#include <map>
#include <vector>

#include "rpc/graph.hpp"

namespace rpc {

struct OracleOptions {
    int vertex_cap = 12;
};

// Every rainbow cycle of exactly `length` vertices through both a and b, in
// canonical form (see canonical_cycle), each reported once. limit = 0 means
// unbounded; otherwise enumeration stops after `limit` cycles. Throws when
// the graph exceeds opts.vertex_cap.
std::vector<std::vector<int>> enumerate_rainbow_cycles(const ColoredGraph& g, int a, int b,
                                                       int length, std::size_t limit = 0,
                                                       const OracleOptions& opts = {});

// Same, without the rainbow filter or the containment constraint.
std::vector<std::vector<int>> enumerate_all_cycles(const ColoredGraph& g, int length,
                                                   std::size_t limit = 0,
                                                   const OracleOptions& opts = {});

enum class Verdict { Present, Absent };

// For each length 3..n: does some rainbow cycle through {a, b} exist?
std::map<int, Verdict> pancyclicity_table(const ColoredGraph& g, int a, int b,
                                          const OracleOptions& opts = {});

// Rotates the minimum vertex to the front and orients so the second entry is
// smaller than the last; the unique representative of an undirected cycle.
std::vector<int> canonical_cycle(const std::vector<int>& vs);

}  // namespace rpc
