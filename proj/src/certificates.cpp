#include "critgraph/certificates.hpp"

#include <cmath>
#include <filesystem>

#include "critgraph/graph_io.hpp"

namespace critgraph::certs {

namespace {

nlohmann::json coloring_to_json(const Coloring& c) {
    return nlohmann::json{{"k", c.k}, {"assignment", c.assignment}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
    return Coloring{j.at("k").get<int>(), j.at("assignment").get<std::vector<int>>()};
}

bool proper_with_k_colors(const Graph& g, const Coloring& c, int k) {
    if (c.k != k || static_cast<int>(c.assignment.size()) != g.n()) return false;
    for (int v : c.assignment) {
        if (v < 0 || v >= k) return false;
    }
    return is_proper(g, c);
}

Validation fail(const std::string& message) {
    return Validation{false, false, message};
}

Validation validate_criticality_body(const Graph& g, const CriticalityReport& report);

Validation validate_chromatic_number(const Graph& g, const nlohmann::json& cert) {
    int value = cert.at("value").get<int>();
    if (cert.contains("witness")) {
        if (!proper_with_k_colors(g, coloring_from_json(cert["witness"]), value)) {
            return fail("witness is not a proper coloring with the claimed color count");
        }
    }
    if (chromatic_number(g) != value) return fail("chromatic number does not match");
    return Validation{true, true, "chromatic number " + std::to_string(value) + " confirmed"};
}

Validation validate_k_colorable(const Graph& g, const nlohmann::json& cert) {
    int k = cert.at("k").get<int>();
    bool verdict = cert.at("verdict").get<bool>();
    if (verdict) {
        if (!cert.contains("witness")) return fail("positive verdict lacks a witness");
        if (!proper_with_k_colors(g, coloring_from_json(cert["witness"]), k)) {
            return fail("witness is not a proper " + std::to_string(k) + "-coloring");
        }
    } else if (is_k_colorable(g, k)) {
        return fail("graph is " + std::to_string(k) + "-colorable despite negative verdict");
    }
    return Validation{true, verdict, "k-colorable verdict confirmed"};
}

Validation validate_criticality(const nlohmann::json& cert) {
    Graph g = graph_from_json(cert.at("graph"));
    CriticalityReport report = report_from_json(cert.at("report"));
    return validate_criticality_body(g, report);
}

Validation validate_criticality_body(const Graph& g, const CriticalityReport& report) {
    const bool vertex_kind = report.kind == ReportKind::vertex_critical_4;
    if (report.verdict) {
        if (report.kind == ReportKind::d_graph && max_degree(g) > 4) {
            return fail("max degree exceeds 4");
        }
        if (!report.four_coloring ||
            !proper_with_k_colors(g, *report.four_coloring, 4)) {
            return fail("missing or improper 4-coloring witness");
        }
        if (is_k_colorable(g, 3)) return fail("graph is 3-colorable; chi is not 4");
        std::size_t expected = vertex_kind ? static_cast<std::size_t>(g.n())
                                           : static_cast<std::size_t>(g.m());
        if (report.witnesses.size() != expected) {
            return fail("expected one witness per removed element");
        }
        for (const RemovalWitness& w : report.witnesses) {
            Graph reduced;
            if (vertex_kind) {
                if (!w.removed_vertex || !g.has_vertex(*w.removed_vertex)) {
                    return fail("witness names an invalid vertex");
                }
                reduced = remove_vertex(g, *w.removed_vertex);
            } else {
                if (!w.removed_edge || !g.has_edge(w.removed_edge->u, w.removed_edge->v)) {
                    return fail("witness names an invalid edge");
                }
                reduced = remove_edge(g, *w.removed_edge);
            }
            if (!proper_with_k_colors(reduced, w.coloring, 3)) {
                return fail("witness coloring is not a proper 3-coloring of the reduced graph");
            }
        }
        return Validation{true, true, "criticality verdict confirmed"};
    }

    if (!report.failure) return fail("negative verdict lacks a failing element");
    const Failure& f = *report.failure;
    switch (f.evidence) {
        case FailureEvidence::chi_not_4: {
            if (!f.chi) return fail("chi-not-4 evidence lacks the actual value");
            int chi = chromatic_number(g);
            if (chi == 4 || chi != *f.chi) return fail("chi-not-4 evidence does not hold");
            break;
        }
        case FailureEvidence::chi_unchanged_after_removal: {
            Graph reduced;
            if (f.edge) {
                if (!g.has_edge(f.edge->u, f.edge->v)) return fail("failing edge not in graph");
                reduced = remove_edge(g, *f.edge);
            } else if (f.vertex) {
                if (!g.has_vertex(*f.vertex)) return fail("failing vertex not in graph");
                reduced = remove_vertex(g, *f.vertex);
            } else {
                return fail("chi-unchanged evidence names no element");
            }
            if (is_k_colorable(reduced, 3)) {
                return fail("removal does drop the chromatic number");
            }
            break;
        }
        case FailureEvidence::max_degree_exceeds_4: {
            if (!f.vertex || !g.has_vertex(*f.vertex) || degree(g, *f.vertex) <= 4) {
                return fail("max-degree evidence does not hold");
            }
            break;
        }
    }
    return Validation{true, false, "negative criticality verdict confirmed"};
}

Validation validate_induced_d_scan(const nlohmann::json& cert) {
    Graph g = graph_from_json(cert.at("graph"));
    bool found = cert.at("found").get<bool>();
    if (found) {
        auto subset = cert.at("subset").get<std::vector<int>>();
        Graph h = induced_subgraph(g, subset);
        CriticalityReport report = report_from_json(cert.at("report"));
        if (report.kind != ReportKind::d_graph || !report.verdict) {
            return fail("hit report is not a positive d-graph report");
        }
        Validation inner = validate_criticality_body(h, report);
        if (!inner.valid) return fail("induced subgraph report: " + inner.message);
        return Validation{true, true, "induced D-subgraph confirmed"};
    }
    if (find_induced_d_subgraph(g).has_value()) {
        return fail("scan finds an induced D-subgraph despite the absence claim");
    }
    return Validation{true, false, "absence of induced D-subgraph confirmed"};
}

Validation validate_edge_subgraph_d(const nlohmann::json& cert) {
    Graph g = graph_from_json(cert.at("graph"));
    Graph h = graph_from_json(cert.at("result"));
    if (h.n() != g.n()) return fail("result changes the vertex set");
    for (const Edge& e : h.edges()) {
        if (!g.has_edge(e.u, e.v)) return fail("result has an edge the input lacks");
    }
    CriticalityReport report = report_from_json(cert.at("report"));
    if (report.kind != ReportKind::d_graph || !report.verdict) {
        return fail("result report is not a positive d-graph report");
    }
    Validation inner = validate_criticality_body(h, report);
    if (!inner.valid) return fail("result report: " + inner.message);
    return Validation{true, true, "edge-subgraph D-graph confirmed"};
}

Validation validate_ray(const nlohmann::json& cert, const std::string& base_dir) {
    Graph g = graph_from_json(cert.at("graph"));
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() ? path.string() : (std::filesystem::path(base_dir) / path).string();
    };
    Eigen::MatrixXd d = load_matrix_csv(resolve(cert.at("matrices_csv").at("D").get<std::string>()));
    Eigen::MatrixXd p = load_matrix_csv(resolve(cert.at("matrices_csv").at("P").get<std::string>()));
    solver::SolveConfig cfg = solver::config_from_json(cert.at("config"));

    deng::ResidualReport res = deng::check_constraints(g, d, p, cfg.tols);
    double obj = deng::objective(deng::build_C(g.n()), SymMatrix::from_dense(d));
    double stored = cert.at("objective").get<double>();
    if (std::abs(obj - stored) > 1e-9 * std::max(1.0, std::abs(stored))) {
        return fail("stored objective does not match the matrices");
    }
    if (!res.feasible) return fail("certificate point violates the constraints");

    auto verdict = solver::ray_verdict_from_string(cert.at("verdict").get<std::string>());
    bool is_negative_ray = res.feasible && obj < -cfg.delta;
    if (verdict == solver::RayVerdict::negative_ray_found && !is_negative_ray) {
        return fail("negative-ray verdict not supported by the certificate point");
    }
    if (verdict == solver::RayVerdict::no_ray_found_within_budget && is_negative_ray) {
        return fail("certificate point is a negative ray despite the no-ray verdict");
    }
    return Validation{true, verdict == solver::RayVerdict::negative_ray_found,
                      "ray certificate confirmed"};
}

}  // namespace

nlohmann::json chromatic_number_certificate(const Graph& g, int chi,
                                            const std::optional<Coloring>& witness) {
    nlohmann::json cert{
        {"claim", "chromatic-number"}, {"graph", graph_to_json(g)}, {"value", chi}};
    if (witness) cert["witness"] = coloring_to_json(*witness);
    return cert;
}

nlohmann::json k_colorable_certificate(const Graph& g, int k,
                                       const std::optional<Coloring>& witness) {
    nlohmann::json cert{{"claim", "k-colorable"},
                        {"graph", graph_to_json(g)},
                        {"k", k},
                        {"verdict", witness.has_value()}};
    if (witness) cert["witness"] = coloring_to_json(*witness);
    return cert;
}

nlohmann::json criticality_certificate(const Graph& g, const CriticalityReport& report) {
    return nlohmann::json{{"claim", to_string(report.kind)},
                          {"graph", graph_to_json(g)},
                          {"verdict", report.verdict},
                          {"report", report_to_json(report)}};
}

nlohmann::json induced_d_scan_certificate(const Graph& g,
                                          const std::optional<InducedDSubgraph>& hit) {
    nlohmann::json cert{{"claim", "induced-d-subgraph"},
                        {"graph", graph_to_json(g)},
                        {"found", hit.has_value()},
                        {"verdict", hit.has_value()}};
    if (hit) {
        cert["subset"] = hit->vertices;
        cert["report"] = report_to_json(hit->report);
    }
    return cert;
}

nlohmann::json edge_subgraph_d_certificate(const Graph& g, const Graph& result) {
    return nlohmann::json{{"claim", "edge-subgraph-d"},
                          {"graph", graph_to_json(g)},
                          {"verdict", true},
                          {"result", graph_to_json(result)},
                          {"report", report_to_json(is_d_graph(result))}};
}

nlohmann::json ray_certificate(const Graph& g, const solver::RayCertificate& cert,
                               const std::string& d_csv, const std::string& p_csv) {
    nlohmann::json j = solver::certificate_to_json(cert);
    j["claim"] = "negative-ray";
    j["graph"] = graph_to_json(g);
    j["matrices_csv"] = nlohmann::json{{"D", d_csv}, {"P", p_csv}};
    return j;
}

Validation revalidate(const nlohmann::json& certificate, const std::string& base_dir) {
    try {
        const std::string claim = certificate.at("claim").get<std::string>();
        if (claim == "chromatic-number") {
            return validate_chromatic_number(graph_from_json(certificate.at("graph")),
                                             certificate);
        }
        if (claim == "k-colorable") {
            return validate_k_colorable(graph_from_json(certificate.at("graph")), certificate);
        }
        if (claim == "edge-critical-4" || claim == "vertex-critical-4" || claim == "d-graph") {
            return validate_criticality(certificate);
        }
        if (claim == "induced-d-subgraph") return validate_induced_d_scan(certificate);
        if (claim == "edge-subgraph-d") return validate_edge_subgraph_d(certificate);
        if (claim == "negative-ray") return validate_ray(certificate, base_dir);
        return fail("unknown claim: " + claim);
    } catch (const std::exception& e) {
        return fail(std::string("certificate malformed: ") + e.what());
    }
}

}  // namespace critgraph::certs
