#ifndef CRITGRAPH_FAMILIES_HPP
#define CRITGRAPH_FAMILIES_HPP

#include <utility>

#include "critgraph/graph.hpp"

namespace critgraph::families {

/// Complete graph on 4 vertices (F_0).
Graph k4();

/// The 5-vertex kite gadget: triangle {1,2,3}, vertex 4 adjacent to 2 and 3,
/// pendant vertex 0 adjacent to 1.
Graph kite();

/// Canonical Moser spindle: 7 vertices, 11 edges, max degree 4. Two
/// diamonds sharing apex 0, tips 3 and 6 joined. The edge list is fixed
/// here and certified 4-edge-critical by the oracle test suite.
Graph moser_spindle();

struct KiteReplacementStep {
    Edge replaced;          // (u_i, u_j), roles by index order: u_i = min
    int v2 = 0, v3 = 0, v4 = 0;  // the three appended vertices
};

/// Replaces edge e = (u_i, u_j) by a kite: removes e, appends the mutually
/// adjacent vertices v2, v3, v4 and attaches (u_i,v2), (u_j,v3), (u_j,v4).
/// Degrees: u_i unchanged, u_j gains one, the new vertices have degree 3.
/// Errors if e is absent or if the result would exceed max degree 4.
std::pair<Graph, KiteReplacementStep> kite_replace(const Graph& g, Edge e);

/// Thomas-Walls graph F_n: F_0 = K4; each step replaces the (v3,v4) edge
/// of the most recently inserted kite (for F_1, the edge (0,1) of K4),
/// the smaller endpoint taking the u_i role. F_n has 4+3n vertices, n of
/// degree 4 and 4+2n of degree 3.
Graph thomas_walls(int n);

/// Adds an edge between the lexicographically first non-adjacent pair of
/// degree-3 vertices; errors when no such pair exists.
std::pair<Graph, Edge> add_degree3_edge(const Graph& g);

/// F_n plus one edge between degree-3 vertices (add_degree3_edge). The
/// result keeps chi = 4, max degree 4 and vertex-criticality, but is not
/// a D-graph and has no vertex-induced D-subgraph.
Graph counterexample(int n);

}  // namespace critgraph::families

#endif
