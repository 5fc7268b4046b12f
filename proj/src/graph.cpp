#include "critgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace critgraph {

Edge make_edge(int a, int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("edge endpoint is negative");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count is negative");
    }
    for (Edge& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.v >= n_) {
            throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                        " out of range for n=" + std::to_string(n_));
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return adj_[v];
}

bool Graph::has_edge(int a, int b) const {
    if (a == b || !has_vertex(a) || !has_vertex(b)) return false;
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

int degree(const Graph& g, int v) {
    return static_cast<int>(g.neighbors(v).size());
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) {
        d = std::max(d, degree(g, v));
    }
    return d;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate vertex in keep set");
    }
    std::vector<int> relabel(g.n(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= g.n()) {
            throw std::invalid_argument("keep vertex " + std::to_string(v) +
                                        " out of range");
        }
        relabel[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
            edges.push_back(make_edge(relabel[e.u], relabel[e.v]));
        }
    }
    return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

Graph remove_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    std::vector<int> keep;
    keep.reserve(g.n() - 1);
    for (int w = 0; w < g.n(); ++w) {
        if (w != v) keep.push_back(w);
    }
    return induced_subgraph(g, keep);
}

Graph remove_edge(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") not in graph");
    }
    std::vector<Edge> edges;
    edges.reserve(g.m() - 1);
    for (const Edge& f : g.edges()) {
        if (f != e) edges.push_back(f);
    }
    return Graph(g.n(), std::move(edges));
}

Graph add_edge(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    if (e.v >= g.n()) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") already present");
    }
    std::vector<Edge> edges = g.edges();
    edges.push_back(e);
    return Graph(g.n(), std::move(edges));
}

}  // namespace critgraph
