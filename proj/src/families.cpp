#include "critgraph/families.hpp"

#include <stdexcept>
#include <string>

#include "critgraph/coloring.hpp"

namespace critgraph::families {

Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph kite() {
    return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

Graph moser_spindle() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                     {2, 3}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

std::pair<Graph, KiteReplacementStep> kite_replace(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("kite_replace: edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") not in graph");
    }
    const int ui = e.u, uj = e.v;
    if (degree(g, uj) + 1 > 4) {
        throw std::invalid_argument("kite_replace: vertex " + std::to_string(uj) +
                                    " would exceed degree 4");
    }
    const int v2 = g.n(), v3 = g.n() + 1, v4 = g.n() + 2;
    std::vector<Edge> edges;
    edges.reserve(g.m() + 5);
    for (const Edge& f : g.edges()) {
        if (f != e) edges.push_back(f);
    }
    edges.push_back(make_edge(v2, v3));
    edges.push_back(make_edge(v2, v4));
    edges.push_back(make_edge(v3, v4));
    edges.push_back(make_edge(ui, v2));
    edges.push_back(make_edge(uj, v3));
    edges.push_back(make_edge(uj, v4));
    return {Graph(g.n() + 3, std::move(edges)), KiteReplacementStep{e, v2, v3, v4}};
}

Graph thomas_walls(int n) {
    if (n < 0) throw std::invalid_argument("thomas_walls: n is negative");
    if (4 + 3 * n > kMaxOracleVertices) {
        throw std::invalid_argument("thomas_walls: F_" + std::to_string(n) + " has " +
                                    std::to_string(4 + 3 * n) + " vertices, above the cap of " +
                                    std::to_string(kMaxOracleVertices));
    }
    Graph g = k4();
    Edge next{0, 1};
    for (int i = 0; i < n; ++i) {
        auto [replaced, step] = kite_replace(g, next);
        g = std::move(replaced);
        next = make_edge(step.v3, step.v4);
    }
    return g;
}

std::pair<Graph, Edge> add_degree3_edge(const Graph& g) {
    for (int a = 0; a < g.n(); ++a) {
        if (degree(g, a) != 3) continue;
        for (int b = a + 1; b < g.n(); ++b) {
            if (degree(g, b) != 3 || g.has_edge(a, b)) continue;
            Edge e{a, b};
            return {add_edge(g, e), e};
        }
    }
    throw std::invalid_argument("no non-adjacent pair of degree-3 vertices");
}

Graph counterexample(int n) {
    return add_degree3_edge(thomas_walls(n)).first;
}

}  // namespace critgraph::families
