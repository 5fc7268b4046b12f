#include "critgraph/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace critgraph {

namespace {

void check_cap(const Graph& g) {
    if (g.n() > kMaxOracleVertices) {
        throw std::invalid_argument(
            "graph has " + std::to_string(g.n()) + " vertices; exhaustive search is capped at " +
            std::to_string(kMaxOracleVertices));
    }
}

std::vector<int> search_order(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = degree(g, a), db = degree(g, b);
        return da != db ? da > db : a < b;
    });
    return order;
}

// Backtracking search for a proper k-coloring honoring the given pins.
// Colors are tried in ascending order at each vertex.
std::optional<std::vector<int>> backtrack(const Graph& g, int k,
                                          const std::vector<std::pair<int, int>>& pins) {
    const int n = g.n();
    if (n == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;

    std::vector<int> pinned(n, -1);
    for (auto [v, c] : pins) {
        if (c >= k) return std::nullopt;
        pinned[v] = c;
    }

    std::vector<int> order = search_order(g);
    std::vector<int> color(n, -1);
    std::vector<int> candidate(n, 0);

    int pos = 0;
    while (pos >= 0) {
        if (pos == n) return color;
        int v = order[pos];
        bool advanced = false;
        for (int c = candidate[pos]; c < k; ++c) {
            if (pinned[v] >= 0 && c != pinned[v]) continue;
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v] = c;
                candidate[pos] = c + 1;
                ++pos;
                if (pos < n) candidate[pos] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            candidate[pos] = 0;
            --pos;
            if (pos >= 0) color[order[pos]] = -1;
        }
    }
    return std::nullopt;
}

// First-fit greedy in search order; valid whenever k > max degree.
std::vector<int> greedy(const Graph& g, int k) {
    std::vector<int> color(g.n(), -1);
    for (int v : search_order(g)) {
        std::vector<bool> used(k, false);
        for (int w : g.neighbors(v)) {
            if (color[w] >= 0) used[color[w]] = true;
        }
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.n()) {
        throw std::invalid_argument("coloring length " + std::to_string(c.assignment.size()) +
                                    " does not match vertex count " + std::to_string(g.n()));
    }
    for (const Edge& e : g.edges()) {
        if (c.assignment[e.u] == c.assignment[e.v]) return false;
    }
    return true;
}

std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.n()) {
        throw std::invalid_argument("coloring length does not match vertex count");
    }
    std::vector<Edge> mono;
    for (const Edge& e : g.edges()) {
        if (c.assignment[e.u] == c.assignment[e.v]) mono.push_back(e);
    }
    return mono;
}

std::optional<Coloring> find_coloring(const Graph& g, int k) {
    check_cap(g);
    if (k < 0) throw std::invalid_argument("color count is negative");
    if (g.n() == 0) return Coloring{k, {}};
    if (k == 0) return std::nullopt;
    if (k > max_degree(g)) {
        return Coloring{k, greedy(g, k)};
    }
    std::vector<std::pair<int, int>> pins{{0, 0}};
    auto colors = backtrack(g, k, pins);
    if (!colors) return std::nullopt;
    return Coloring{k, std::move(*colors)};
}

bool is_k_colorable(const Graph& g, int k) {
    return find_coloring(g, k).has_value();
}

int chromatic_number(const Graph& g) {
    check_cap(g);
    for (int k = 0; k <= g.n(); ++k) {
        if (is_k_colorable(g, k)) return k;
    }
    return g.n();  // unreachable: n colors always suffice
}

std::optional<Coloring> find_v_critical_coloring(const Graph& g, int v) {
    check_cap(g);
    if (!g.has_vertex(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    auto sub = find_coloring(remove_vertex(g, v), 3);
    if (!sub) return std::nullopt;
    Coloring c{4, std::vector<int>(g.n(), -1)};
    c.assignment[v] = 3;
    for (int w = 0, i = 0; w < g.n(); ++w) {
        if (w != v) c.assignment[w] = sub->assignment[i++];
    }
    return c;
}

std::optional<Coloring> find_d_coloring(const Graph& g, Edge e) {
    check_cap(g);
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") not in graph");
    }
    // A D-coloring is a proper 3-coloring of g minus e with the endpoints
    // forced equal; the shared color is pinned to 0 (color symmetry).
    Graph h = remove_edge(g, e);
    std::vector<std::pair<int, int>> pins{{e.u, 0}, {e.v, 0}};
    auto colors = backtrack(h, 3, pins);
    if (!colors) return std::nullopt;
    Coloring c{3, std::move(*colors)};
    auto mono = monochromatic_edges(g, c);
    if (mono.size() != 1 || mono[0] != e) {
        throw std::logic_error("D-coloring post-check failed");
    }
    return c;
}

}  // namespace critgraph
