// Counting machinery around a stuck configuration: a rainbow cycle C through
// {a, b}, a maximal rainbow fresh clique H outside it, and the remainder R.
// Every bound is exposed as a structured check. Unconditional bounds must
// hold on any strongly colored input; conditional bounds carry an explicit
// hypothesis and report vacuous with the reason when it fails.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpc/clique.hpp"
#include "rpc/cycle.hpp"
#include "rpc/engine.hpp"
#include "rpc/graph.hpp"

namespace rpc {

struct CliqueVertexStats {
    int w = -1;
    int fresh_to_cycle = 0;       // fresh edges w -> C
    int ccolor_to_cycle = 0;      // cycle-colored edges w -> C
    int fresh_to_remainder = 0;   // fresh edges w -> R
    int ccolor_to_remainder = 0;  // cycle-colored edges w -> R
    // Cycle-edge subscripts (1-based; edge i joins v_i v_{i+1}, edge l wraps)
    // whose colors cannot occur at w: both edges around each fresh neighbor.
    std::vector<int> blocked_subscripts;
};

struct CountingStats {
    std::vector<CliqueVertexStats> per_vertex;
    long long sum_fresh_to_cycle = 0;
    long long sum_ccolor_to_cycle = 0;
    long long sum_fresh_to_remainder = 0;
    long long sum_ccolor_to_remainder = 0;
    std::vector<int> remainder;  // V minus (cycle plus clique), sorted
};

CountingStats compute_counting_stats(const ColoredGraph& g, const ColoredCycle& cyc,
                                     const RainbowClique& h);

enum class ForbiddenKind { Type1, Type2 };
const char* to_string(ForbiddenKind k);

// A pair of fresh cycle-to-clique edges that would have let the engine build
// an (l+1)-cycle through the anchors: type 1 is one clique vertex seeing two
// cyclically consecutive cycle vertices; type 2 is two distinct clique
// vertices at subscript gap 2..k whose spanned arc avoids both anchors.
// Subscripts are 1-based on the reindexed cycle; j may be l+1, meaning v_1.
struct ForbiddenPair {
    ForbiddenKind kind = ForbiddenKind::Type1;
    int subscript_i = 0;
    int subscript_j = 0;
    std::pair<int, int> edge_i{-1, -1};  // (cycle vertex, clique vertex)
    std::pair<int, int> edge_j{-1, -1};
};

// Convention: the statement is lhs <= rhs. Identities set holds = (lhs ==
// rhs). subject is the clique vertex, cycle position, or remainder vertex
// the check is about, -1 for aggregates. A vacuous check's hypothesis failed;
// the witness or note says why.
struct InequalityCheck {
    std::string name;
    int subject = -1;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = true;
    bool vacuous = false;
    std::optional<ForbiddenPair> witness;
    std::string note;
};

// Every cycle vertex has at least delta - l + 1 fresh edges leaving the
// cycle. Holds in any strongly colored graph; vacuous when the bound is
// nonpositive.
std::vector<InequalityCheck> check_external_fresh_bound(const ColoredGraph& g,
                                                        const ColoredCycle& cyc);

// Per clique vertex w: fresh_to_cycle + 2*ccolor_to_cycle +
// ccolor_to_remainder <= l. Unconditional under a strong coloring.
std::vector<InequalityCheck> check_cycle_color_budget(const ColoredCycle& cyc,
                                                      const CountingStats& stats);

// Per clique vertex w, under the hypothesis that no two of w's fresh cycle
// neighbors are cyclically consecutive: 2*fresh_to_cycle + ccolor_to_cycle +
// ccolor_to_remainder <= l. When the hypothesis fails the check is vacuous
// and carries the witnessing consecutive pair.
std::vector<InequalityCheck> check_blocked_color_budget(const ColoredGraph& g,
                                                        const ColoredCycle& cyc,
                                                        const RainbowClique& h,
                                                        const CountingStats& stats);

// Two checks: all edges with exactly one endpoint in H are pairwise
// distinctly colored (collision count vs 0), hence the cycle-colored ones
// number at most l. Unconditional under a strong coloring.
std::vector<InequalityCheck> check_clique_incident_distinct(const ColoredGraph& g,
                                                            const ColoredCycle& cyc,
                                                            const RainbowClique& h);

// One emitted run of the greedy path decomposition.
struct PathSegment {
    int chosen_subscript = 0;     // the anchor subscript d that opened the run
    std::vector<int> subscripts;  // contiguous subscripts covered
    std::vector<int> vertices;
    bool terminal_rule = false;  // emitted by the boundary rule, runs to b
    int fresh_edge_count = 0;    // fresh edges from the run's vertices into H
};

// Greedy decomposition of one of the two a-to-b routes along the reindexed
// cycle (a = v_1, b = v_m). Forward walks subscripts 1..m; backward walks
// l+1 down to m, where v_{l+1} means v_1. Each run starts at the first
// fresh-incident vertex in scan order and spans k+1 vertices (k+2 when the
// anchor has exactly one fresh edge), clipped to b by the boundary rule.
// Skipped subscripts had no fresh edges into H.
struct PathDecomposition {
    Direction route = Direction::Forward;
    int subscript_b = 0;  // m
    std::vector<PathSegment> segments;
    std::vector<int> skipped_subscripts;
};

// cyc must be reindexed (a at the front); b names the other anchor.
PathDecomposition decompose_forward_path(const ColoredGraph& g, const ColoredCycle& cyc, int b,
                                         const RainbowClique& h);
PathDecomposition decompose_backward_path(const ColoredGraph& g, const ColoredCycle& cyc, int b,
                                          const RainbowClique& h);

// Rotates a to the front and, when b sits at the last position, flips the
// orientation, so b's subscript m lands in [2, l-1] and both routes have at
// least one edge.
ColoredCycle reindex_for_pair(const ColoredCycle& cyc, int a, int b);

// First forbidden pair in deterministic scan order (type 1 by position, then
// type 2 by (i, gap, clique ids)), or none. cyc must be reindexed.
std::optional<ForbiddenPair> find_forbidden_pair(const ColoredGraph& g, const ColoredCycle& cyc,
                                                 int b, const RainbowClique& h);

// Segment bounds for both route decompositions, under the hypothesis that no
// forbidden pair exists and the clique has at least 3 vertices (the bounds
// are provably false for 2-cliques, and the chain that uses them never runs
// below 3). Boundary-rule runs are bounded by k (one or two vertices) or
// k+1; every other run by its vertex count minus one.
struct SegmentBoundReport {
    bool vacuous = false;
    std::optional<ForbiddenPair> witness;
    std::string note;
    PathDecomposition forward;
    PathDecomposition backward;
    std::vector<InequalityCheck> checks;
    bool all_hold() const;
};

SegmentBoundReport check_segment_fresh_bounds(const ColoredGraph& g, const ColoredCycle& cyc,
                                              int a, int b, const RainbowClique& h);

// Full replay of the counting chain for a certified stuck configuration: no
// rainbow (l+1)-cycle through {a, b} exists, which the caller certified by
// exhaustive search. Unconditional bounds must hold outright; bounds that
// additionally assume the degree threshold 3*delta >= 2n+3 are vacuous below
// it. The chain forces 3*delta <= 2n+2, so on a true certified failure the
// report is consistent; anything else is flagged as an anomaly.
struct AuditReport {
    int n = 0;
    int l = 0;
    int k = 0;
    int min_degree = 0;
    int a = -1;
    int b = -1;
    RainbowClique clique;
    CountingStats stats;
    std::vector<InequalityCheck> checks;
    std::optional<ForbiddenPair> forbidden;
    SegmentBoundReport segment_bounds;
    bool consistent = false;
    std::string conclusion;
};

AuditReport audit_failure(const ColoredGraph& g, int a, int b, const ColoredCycle& cyc);

// Decorated pancyclicity run: the certificate plus per-length counting
// snapshots, and the failure replay at the first certified gap reached from
// a found cycle.
struct TrajectoryStep {
    int length = 0;
    std::string mechanism;
    std::vector<int> cycle;
    RainbowClique clique;  // empty when the cycle spans the graph
    CountingStats stats;
    std::vector<InequalityCheck> checks;
    std::optional<ForbiddenPair> forbidden;
    SegmentBoundReport segment_bounds;
};

struct TrajectoryAudit {
    PancyclicCertificate certificate;
    std::vector<TrajectoryStep> steps;
    std::optional<AuditReport> failure;
};

TrajectoryAudit audit_pair_trajectory(const ColoredGraph& g, int a, int b,
                                      const SearchLimits& limits = {});

}  // namespace rpc
