// JSON and DOT rendering for everything the tools emit. Objects keep
// insertion order so identical runs serialize byte-identically.
#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "rpc/audit.hpp"
#include "rpc/engine.hpp"
#include "rpc/graph.hpp"
#include "rpc/oracle.hpp"

namespace rpc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rpc-1";

const char* to_string(Verdict v);

Json cycle_json(const ColoredGraph& g, const std::vector<int>& vertices);
Json validation_json(const ValidationReport& report);
Json stats_json(const CountingStats& stats);
Json inequality_json(const InequalityCheck& check);
Json forbidden_json(const ForbiddenPair& fp);
Json decomposition_json(const PathDecomposition& d);
Json segment_report_json(const SegmentBoundReport& rep);
Json certificate_json(const ColoredGraph& g, const PancyclicCertificate& cert);
Json audit_json(const ColoredGraph& g, const AuditReport& rep);
Json trajectory_json(const ColoredGraph& g, const TrajectoryAudit& tr);
Json oracle_table_json(int a, int b, const std::map<int, Verdict>& table);
Json error_json(const std::string& kind, const std::string& message);

// GraphViz rendering of the graph with one cycle's edges highlighted.
std::string write_dot(const ColoredGraph& g, const std::vector<int>& cycle);

}  // namespace rpc
