#include "critgraph/criticality.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <unordered_map>

namespace critgraph {

std::string to_string(ReportKind kind) {
    switch (kind) {
        case ReportKind::edge_critical_4: return "edge-critical-4";
        case ReportKind::vertex_critical_4: return "vertex-critical-4";
        case ReportKind::d_graph: return "d-graph";
    }
    throw std::logic_error("bad ReportKind");
}

ReportKind report_kind_from_string(const std::string& s) {
    if (s == "edge-critical-4") return ReportKind::edge_critical_4;
    if (s == "vertex-critical-4") return ReportKind::vertex_critical_4;
    if (s == "d-graph") return ReportKind::d_graph;
    throw std::invalid_argument("unknown report kind: " + s);
}

std::string to_string(FailureEvidence e) {
    switch (e) {
        case FailureEvidence::chi_not_4: return "chi-not-4";
        case FailureEvidence::chi_unchanged_after_removal: return "chi-unchanged-after-removal";
        case FailureEvidence::max_degree_exceeds_4: return "max-degree-exceeds-4";
    }
    throw std::logic_error("bad FailureEvidence");
}

namespace {

FailureEvidence evidence_from_string(const std::string& s) {
    if (s == "chi-not-4") return FailureEvidence::chi_not_4;
    if (s == "chi-unchanged-after-removal") return FailureEvidence::chi_unchanged_after_removal;
    if (s == "max-degree-exceeds-4") return FailureEvidence::max_degree_exceeds_4;
    throw std::invalid_argument("unknown failure evidence: " + s);
}

nlohmann::json coloring_to_json(const Coloring& c) {
    return nlohmann::json{{"k", c.k}, {"assignment", c.assignment}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
    return Coloring{j.at("k").get<int>(), j.at("assignment").get<std::vector<int>>()};
}

// chi(g) = 4 exactly <=> not 3-colorable and 4-colorable.
bool chi_is_4(const Graph& g, Coloring* four_coloring_out) {
    if (is_k_colorable(g, 3)) return false;
    auto c4 = find_coloring(g, 4);
    if (!c4) return false;
    if (four_coloring_out) *four_coloring_out = std::move(*c4);
    return true;
}

// Memoized 3-colorability keyed by canonical edge list; shared by the
// subset scan, where sibling subsets induce identical relabeled graphs.
struct ThreeColorableCache {
    std::unordered_map<std::string, bool> map;

    static std::string key(const Graph& g) {
        std::string k;
        k.reserve(1 + 2 * g.edges().size());
        k.push_back(static_cast<char>(g.n()));
        for (const Edge& e : g.edges()) {
            k.push_back(static_cast<char>(e.u));
            k.push_back(static_cast<char>(e.v));
        }
        return k;
    }

    bool three_colorable(const Graph& g) {
        std::string k = key(g);
        auto it = map.find(k);
        if (it != map.end()) return it->second;
        bool value = is_k_colorable(g, 3);
        map.emplace(std::move(k), value);
        return value;
    }
};

// Verdict-only D-graph test used inside the subset scan. A vertex of
// degree 1 or 2 is impossible in a 4-edge-critical graph (recolor it
// after removing an incident edge), so those subsets are rejected
// without a search.
bool is_d_graph_quick(const Graph& g, ThreeColorableCache& cache) {
    if (max_degree(g) > 4) return false;
    for (int v = 0; v < g.n(); ++v) {
        int d = degree(g, v);
        if (d == 1 || d == 2) return false;
    }
    if (cache.three_colorable(g)) return false;
    if (!is_k_colorable(g, 4)) return false;
    for (const Edge& e : g.edges()) {
        if (!cache.three_colorable(remove_edge(g, e))) return false;
    }
    return true;
}

}  // namespace

nlohmann::json report_to_json(const CriticalityReport& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const RemovalWitness& w : r.witnesses) {
        nlohmann::json jw{{"coloring", coloring_to_json(w.coloring)}};
        if (w.removed_edge) jw["removed_edge"] = {w.removed_edge->u, w.removed_edge->v};
        if (w.removed_vertex) jw["removed_vertex"] = *w.removed_vertex;
        witnesses.push_back(std::move(jw));
    }
    nlohmann::json j{{"kind", to_string(r.kind)}, {"verdict", r.verdict}, {"witnesses", witnesses}};
    if (r.four_coloring) j["four_coloring"] = coloring_to_json(*r.four_coloring);
    if (r.failure) {
        nlohmann::json jf{{"evidence", to_string(r.failure->evidence)}};
        if (r.failure->edge) jf["edge"] = {r.failure->edge->u, r.failure->edge->v};
        if (r.failure->vertex) jf["vertex"] = *r.failure->vertex;
        if (r.failure->chi) jf["chi"] = *r.failure->chi;
        j["failure"] = std::move(jf);
    }
    return j;
}

CriticalityReport report_from_json(const nlohmann::json& j) {
    CriticalityReport r;
    r.kind = report_kind_from_string(j.at("kind").get<std::string>());
    r.verdict = j.at("verdict").get<bool>();
    if (j.contains("four_coloring")) r.four_coloring = coloring_from_json(j.at("four_coloring"));
    for (const auto& jw : j.at("witnesses")) {
        RemovalWitness w;
        w.coloring = coloring_from_json(jw.at("coloring"));
        if (jw.contains("removed_edge")) {
            w.removed_edge = make_edge(jw["removed_edge"][0].get<int>(),
                                       jw["removed_edge"][1].get<int>());
        }
        if (jw.contains("removed_vertex")) w.removed_vertex = jw["removed_vertex"].get<int>();
        r.witnesses.push_back(std::move(w));
    }
    if (j.contains("failure")) {
        Failure f{evidence_from_string(j["failure"].at("evidence").get<std::string>()),
                  std::nullopt, std::nullopt, std::nullopt};
        if (j["failure"].contains("edge")) {
            f.edge = make_edge(j["failure"]["edge"][0].get<int>(),
                               j["failure"]["edge"][1].get<int>());
        }
        if (j["failure"].contains("vertex")) f.vertex = j["failure"]["vertex"].get<int>();
        if (j["failure"].contains("chi")) f.chi = j["failure"]["chi"].get<int>();
        r.failure = std::move(f);
    }
    return r;
}

CriticalityReport is_edge_critical_4(const Graph& g) {
    CriticalityReport r;
    r.kind = ReportKind::edge_critical_4;
    Coloring c4;
    if (!chi_is_4(g, &c4)) {
        r.verdict = false;
        r.failure = Failure{FailureEvidence::chi_not_4, std::nullopt, std::nullopt,
                            chromatic_number(g)};
        return r;
    }
    r.four_coloring = std::move(c4);
    for (const Edge& e : g.edges()) {
        auto c3 = find_coloring(remove_edge(g, e), 3);
        if (!c3) {
            r.verdict = false;
            r.witnesses.clear();
            r.failure = Failure{FailureEvidence::chi_unchanged_after_removal, e,
                                std::nullopt, std::nullopt};
            return r;
        }
        r.witnesses.push_back(RemovalWitness{e, std::nullopt, std::move(*c3)});
    }
    r.verdict = true;
    return r;
}

CriticalityReport is_d_graph(const Graph& g) {
    // Degree bound first: cheap, and spares the exponential check.
    for (int v = 0; v < g.n(); ++v) {
        if (degree(g, v) > 4) {
            CriticalityReport r;
            r.kind = ReportKind::d_graph;
            r.verdict = false;
            r.failure = Failure{FailureEvidence::max_degree_exceeds_4, std::nullopt, v,
                                std::nullopt};
            return r;
        }
    }
    CriticalityReport r = is_edge_critical_4(g);
    r.kind = ReportKind::d_graph;
    return r;
}

CriticalityReport is_vertex_critical_4(const Graph& g) {
    CriticalityReport r;
    r.kind = ReportKind::vertex_critical_4;
    Coloring c4;
    if (!chi_is_4(g, &c4)) {
        r.verdict = false;
        r.failure = Failure{FailureEvidence::chi_not_4, std::nullopt, std::nullopt,
                            chromatic_number(g)};
        return r;
    }
    r.four_coloring = std::move(c4);
    for (int v = 0; v < g.n(); ++v) {
        auto c3 = find_coloring(remove_vertex(g, v), 3);
        if (!c3) {
            r.verdict = false;
            r.witnesses.clear();
            r.failure = Failure{FailureEvidence::chi_unchanged_after_removal, std::nullopt,
                                v, std::nullopt};
            return r;
        }
        r.witnesses.push_back(RemovalWitness{std::nullopt, v, std::move(*c3)});
    }
    r.verdict = true;
    return r;
}

namespace {

// Next size-s combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
    int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < n - s + i) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<std::vector<int>> scan_size_class(const Graph& g, int size, int jobs) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;

    if (jobs <= 1) {
        ThreeColorableCache cache;
        do {
            if (is_d_graph_quick(induced_subgraph(g, subset), cache)) return subset;
        } while (next_combination(subset, g.n()));
        return std::nullopt;
    }

    // Blockwise parallel scan: each block is checked in enumeration order,
    // workers get per-block caches, and the first hit in block order wins.
    constexpr int kBlock = 2048;
    bool more = true;
    while (more) {
        std::vector<std::vector<std::vector<int>>> chunks(jobs);
        for (int w = 0; w < jobs && more; ++w) {
            for (int i = 0; i < kBlock && more; ++i) {
                chunks[w].push_back(subset);
                more = next_combination(subset, g.n());
            }
        }
        std::vector<std::future<std::optional<std::vector<int>>>> futures;
        for (auto& chunk : chunks) {
            futures.push_back(std::async(std::launch::async, [&g, chunk = std::move(chunk)]() {
                ThreeColorableCache cache;
                for (const auto& s : chunk) {
                    if (is_d_graph_quick(induced_subgraph(g, s), cache))
                        return std::optional<std::vector<int>>(s);
                }
                return std::optional<std::vector<int>>{};
            }));
        }
        for (auto& f : futures) {
            if (auto hit = f.get()) return hit;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<InducedDSubgraph> find_induced_d_subgraph(const Graph& g, int jobs) {
    if (g.n() > kMaxOracleVertices) {
        throw std::invalid_argument("subset scan capped at " +
                                    std::to_string(kMaxOracleVertices) + " vertices");
    }
    for (int size = g.n(); size >= 4; --size) {
        if (auto hit = scan_size_class(g, size, jobs)) {
            Graph h = induced_subgraph(g, *hit);
            CriticalityReport report = is_d_graph(h);
            if (!report.verdict) throw std::logic_error("scan hit failed full recheck");
            return InducedDSubgraph{std::move(*hit), std::move(report)};
        }
    }
    return std::nullopt;
}

Graph find_edge_subgraph_d_graph(const Graph& g) {
    if (!chi_is_4(g, nullptr)) {
        throw std::invalid_argument("find_edge_subgraph_d_graph requires chi(g) = 4");
    }
    if (max_degree(g) > 4) {
        throw std::invalid_argument("find_edge_subgraph_d_graph requires max degree <= 4");
    }
    Graph current = g;
    bool removed = true;
    while (removed) {
        removed = false;
        for (const Edge& e : current.edges()) {
            Graph next = remove_edge(current, e);
            if (!is_k_colorable(next, 3)) {
                current = std::move(next);
                removed = true;
                break;  // restart the edge scan
            }
        }
    }
    return current;
}

}  // namespace critgraph
