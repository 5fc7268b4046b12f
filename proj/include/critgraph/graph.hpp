#ifndef CRITGRAPH_GRAPH_HPP
#define CRITGRAPH_GRAPH_HPP

#include <compare>
#include <vector>

namespace critgraph {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Normalizes endpoint order; throws on self-loops or negative indices.
Edge make_edge(int a, int b);

/// Simple undirected graph on vertices {0..n-1}.
/// Immutable after construction; the mutation-style operations below
/// return new graphs, so instances are safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no self-loops, no duplicates.
    // Edges are kept sorted lexicographically.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int a, int b) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, u < v
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

int degree(const Graph& g, int v);
int max_degree(const Graph& g);

/// Induced subgraph on `keep`: exactly the edges with both endpoints kept.
/// Kept vertices are relabeled 0..k-1 in ascending order of original index.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

/// Induced subgraph on all vertices except v.
Graph remove_vertex(const Graph& g, int v);

Graph remove_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

}  // namespace critgraph

#endif
