#ifndef CRITGRAPH_COLORING_HPP
#define CRITGRAPH_COLORING_HPP

#include <optional>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Exhaustive searches refuse anything larger than this.
inline constexpr int kMaxOracleVertices = 24;

struct Coloring {
    int k = 0;                    // color count; values lie in {0..k-1}
    std::vector<int> assignment;  // one entry per vertex

    bool operator==(const Coloring&) const = default;
};

/// True iff no edge of g has equal-colored endpoints.
bool is_proper(const Graph& g, const Coloring& c);

/// Edges whose endpoints share a color, in lexicographic order.
std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& c);

/// Exact decision by backtracking. Deterministic: vertices are tried in
/// descending-degree order (ties by index), colors ascending, and vertex 0
/// is pinned to color 0.
bool is_k_colorable(const Graph& g, int k);

/// Smallest k admitting a proper k-coloring.
int chromatic_number(const Graph& g);

/// Witness form of is_k_colorable: a proper k-coloring, or nullopt.
std::optional<Coloring> find_coloring(const Graph& g, int k);

/// A proper 4-coloring in which color 3 appears exactly once, at v.
/// Built by 3-coloring g minus v and coloring v with the fourth color;
/// nullopt when g minus v is not 3-colorable.
std::optional<Coloring> find_v_critical_coloring(const Graph& g, int v);

/// A 3-coloring in which e is the unique monochromatic edge and every
/// other edge is bichromatic; nullopt when none exists. The shared color
/// of e's endpoints is pinned to 0.
std::optional<Coloring> find_d_coloring(const Graph& g, Edge e);

}  // namespace critgraph

#endif
