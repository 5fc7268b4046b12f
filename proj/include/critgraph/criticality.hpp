#ifndef CRITGRAPH_CRITICALITY_HPP
#define CRITGRAPH_CRITICALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "json.hpp"

namespace critgraph {

enum class ReportKind { edge_critical_4, vertex_critical_4, d_graph };

std::string to_string(ReportKind kind);
ReportKind report_kind_from_string(const std::string& s);

// One removed element together with the 3-coloring that certifies the
// reduced graph is 3-colorable. For vertex removals the coloring indexes
// the relabeled induced subgraph (ascending original order).
struct RemovalWitness {
    std::optional<Edge> removed_edge;
    std::optional<int> removed_vertex;
    Coloring coloring;
};

enum class FailureEvidence { chi_not_4, chi_unchanged_after_removal, max_degree_exceeds_4 };

std::string to_string(FailureEvidence e);

struct Failure {
    FailureEvidence evidence;
    std::optional<Edge> edge;    // the non-critical edge, for chi_unchanged
    std::optional<int> vertex;   // the non-critical or over-degree vertex
    std::optional<int> chi;      // actual chromatic number, for chi_not_4
};

struct CriticalityReport {
    ReportKind kind = ReportKind::d_graph;
    bool verdict = false;
    std::optional<Coloring> four_coloring;  // witness that chi(g) <= 4
    std::vector<RemovalWitness> witnesses;  // one per removed element when verdict true
    std::optional<Failure> failure;         // exactly one failing element when false
};

nlohmann::json report_to_json(const CriticalityReport& r);
CriticalityReport report_from_json(const nlohmann::json& j);

/// chi(g) = 4 and removing any single edge drops chi to 3 or less.
/// By monotonicity this certifies the full definition over all proper
/// edge subsets.
CriticalityReport is_edge_critical_4(const Graph& g);

/// 4-edge-critical with maximum degree at most 4.
CriticalityReport is_d_graph(const Graph& g);

/// chi(g) = 4 and removing any single vertex drops chi to 3 or less.
CriticalityReport is_vertex_critical_4(const Graph& g);

struct InducedDSubgraph {
    std::vector<int> vertices;  // kept subset, ascending
    CriticalityReport report;   // d-graph report for the induced subgraph
};

/// Exhaustive scan over all vertex subsets of size >= 4, by decreasing
/// size then lexicographic order; returns the first subset whose induced
/// subgraph is a D-graph, or nullopt if none is. `jobs` > 1 splits each
/// size class across workers; the merge keeps the scan-order-first hit,
/// so the result is schedule-independent.
std::optional<InducedDSubgraph> find_induced_d_subgraph(const Graph& g, int jobs = 1);

/// Greedily removes, in lexicographic order and restarting after each
/// removal, any edge whose removal keeps chi = 4. Requires chi(g) = 4 and
/// max degree <= 4; the result passes is_d_graph.
Graph find_edge_subgraph_d_graph(const Graph& g);

}  // namespace critgraph

#endif
