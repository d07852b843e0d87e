// Constructive search for rainbow cycles of every feasible length through a
// fixed vertex pair. The ladder grows a rainbow cycle one vertex at a time:
// an insertion move, then a splice through a rainbow fresh clique, then a
// budgeted exhaustive search as a last resort. Absence claims are made only
// when that search runs to completion.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpc/clique.hpp"
#include "rpc/cycle.hpp"
#include "rpc/graph.hpp"

namespace rpc {

enum class ExtensionKind { Type1, Type2, Fallback };
const char* to_string(ExtensionKind k);

struct Extension {
    ExtensionKind kind = ExtensionKind::Fallback;
    std::vector<int> inserted_vertices;  // off-cycle vertices joining the cycle
    int splice_from = -1;                // positions on the old cycle; -1 for fallback
    int splice_to = -1;
    std::vector<std::pair<int, int>> witness_edges;  // fresh edges realizing the move
    std::vector<int> result_vertices;
};

struct SearchLimits {
    long long node_budget = 10'000'000;
    // Clique seed rotations to try before falling back; 0 means one per
    // off-cycle vertex.
    int clique_retries = 0;
};

// Shortest rainbow cycle through the pair: a triangle a-b-x over a common
// neighbor when ab is an edge, otherwise a 4-cycle a-x-b-y over two distinct
// common neighbors (adjacent pairs without a triangle also fall back to a
// 4-cycle). Returns nothing when no such cycle exists; with minimum degree
// above 2n/3 a seed always exists.
std::optional<ColoredCycle> seed_cycle(const ColoredGraph& g, int a, int b);

// Insertion: some off-cycle w sees two cyclically consecutive cycle vertices
// through fresh, distinctly colored edges; w slips between them. The result
// is rainbow whenever the input is. Scans positions then candidates in
// ascending order, so the outcome is deterministic.
std::optional<Extension> find_type1(const ColoredGraph& g, const ColoredCycle& cyc);

// Splice: fresh edges from cycle positions i and j (2 <= gap <= clique size)
// into distinct clique vertices; the forward arc interior is replaced by a
// clique path one vertex longer. Both anchor vertices must survive on the
// kept arc. Candidates failing re-verification are skipped.
std::optional<Extension> find_type2(const ColoredGraph& g, const ColoredCycle& cyc, int a, int b,
                                    const RainbowClique& h);

// Rebuilds the extended cycle and checks it: one vertex longer and rainbow.
ColoredCycle apply_extension(const ColoredGraph& g, const ColoredCycle& cyc, const Extension& ext);

enum class SearchOutcome { Found, Exhausted, Budget };

struct CycleSearch {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    std::vector<int> cycle;
    long long nodes_expanded = 0;
};

// Depth-first search over rainbow paths from a, exact length, must pass
// through b. Exhausted means the whole space was covered: a certificate of
// absence. Budget means the node budget ran out first and nothing is known.
CycleSearch find_cycle_exact(const ColoredGraph& g, int a, int b, int length, long long budget);

enum class ExtendStatus { Extended, CertifiedAbsent, BudgetExhausted };

struct ExtendResult {
    ExtendStatus status = ExtendStatus::BudgetExhausted;
    std::optional<Extension> extension;
    long long nodes_expanded = 0;
};

// One rung of the ladder: insertion, then splices through maximal rainbow
// fresh cliques grown from rotated seed orders, then the budgeted fallback.
ExtendResult extend_once(const ColoredGraph& g, const ColoredCycle& cyc, int a, int b,
                         const SearchLimits& limits = {});

enum class LengthStatus { Found, Impossible, Failed };
const char* to_string(LengthStatus s);

struct PancyclicCertificate {
    int a = -1;
    int b = -1;
    int n = 0;
    int l_min = 3;
    std::map<int, LengthStatus> status;      // every length 3..n
    std::map<int, std::vector<int>> cycles;  // found lengths only
    std::map<int, std::string> mechanisms;   // found lengths only
    // True when every length from l_min through n was realized. Length 3 is
    // exempt for nonadjacent pairs, where no triangle can hold both.
    bool all_feasible_found() const;
};

// Walks lengths l_min..n. Small graphs are handled by per-length exhaustive
// search; otherwise each new length extends the previous cycle when one is
// in hand and restarts with a direct search after a certified gap.
PancyclicCertificate pair_pancyclicity(const ColoredGraph& g, int a, int b,
                                       const SearchLimits& limits = {});

}  // namespace rpc
