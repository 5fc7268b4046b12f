#include "critgraph/deng_program.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "critgraph/criticality.hpp"
#include "critgraph/graph_io.hpp"

namespace critgraph::deng {

SymMatrix build_C(int n) {
    if (n < 1) throw std::invalid_argument("build_C requires n >= 1");
    const int dim = 3 * n + 1;
    SymMatrix c(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            double value = 1.0;
            if (i == dim - 1 && j == dim - 1) {
                value = 6.0;
            } else if (i == dim - 1 || j == dim - 1) {
                value = 4.0;
            }
            c.set(i, j, value);
        }
    }
    return c;
}

Instance make_instance(Graph g) {
    if (g.n() < 1) throw std::invalid_argument("instance requires at least one vertex");
    if (max_degree(g) > 4) {
        throw std::invalid_argument("the program is defined for graphs of max degree <= 4");
    }
    const int dim = 3 * g.n() + 1;
    SymMatrix c = build_C(g.n());
    return Instance{std::move(g), std::move(c), SymMatrix(dim), SymMatrix(dim)};
}

double objective(const SymMatrix& C, const SymMatrix& D) {
    return frobenius_dot(C, D);
}

double objective(const Instance& inst) {
    return objective(inst.C, inst.D);
}

double ResidualReport::max_residual() const {
    return std::max({symmetry, sign, psd, nonedge_equal, edge_zero});
}

ResidualReport check_constraints(const Graph& g, const Eigen::MatrixXd& D,
                                 const Eigen::MatrixXd& P, const Tolerances& tols) {
    const int n = g.n();
    const int dim = 3 * n + 1;
    if (D.rows() != dim || D.cols() != dim || P.rows() != dim || P.cols() != dim) {
        throw std::invalid_argument("matrix dimension does not match 3n+1 = " +
                                    std::to_string(dim));
    }
    ResidualReport r;
    r.symmetry = std::max((D - D.transpose()).cwiseAbs().maxCoeff(),
                          (P - P.transpose()).cwiseAbs().maxCoeff());
    r.sign = std::max(0.0, P.maxCoeff());

    Eigen::MatrixXd sum = D + P;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        0.5 * (sum + sum.transpose()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue computation failed");
    }
    const auto& eig = solver.eigenvalues();
    double lambda_max_abs = std::max(std::abs(eig(0)), std::abs(eig(dim - 1)));
    r.psd = std::max(0.0, -eig(0));
    r.psd_tol = tols.psd_rel * (1.0 + lambda_max_abs);

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            bool edge = g.has_edge(i, j);
            if (!edge) {
                // Constraint 4 binds every non-adjacent pair, diagonal
                // blocks included (simple graphs have no self-loops).
                double lo = D(3 * i, 3 * j), hi = lo;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        double v = D(3 * i + a, 3 * j + b);
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                }
                if (hi - lo > r.nonedge_equal) {
                    r.nonedge_equal = hi - lo;
                    r.worst_nonedge_block = {i, j};
                }
            } else {
                double worst = 0.0;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        worst = std::max(worst, std::abs(P(3 * i + a, 3 * j + b)));
                    }
                }
                if (worst > r.edge_zero) {
                    r.edge_zero = worst;
                    r.worst_edge_block = {i, j};
                }
            }
        }
    }

    r.feasible = r.symmetry <= tols.eq && r.sign <= tols.sign && r.psd <= r.psd_tol &&
                 r.nonedge_equal <= tols.eq && r.edge_zero <= tols.eq;
    return r;
}

ResidualReport check_constraints(const Instance& inst, const Tolerances& tols) {
    return check_constraints(inst.g, inst.D.dense(), inst.P.dense(), tols);
}

nlohmann::json residuals_to_json(const ResidualReport& r) {
    return nlohmann::json{
        {"symmetry", r.symmetry},
        {"sign", r.sign},
        {"psd", r.psd},
        {"psd_tol", r.psd_tol},
        {"nonedge_equal", r.nonedge_equal},
        {"edge_zero", r.edge_zero},
        {"feasible", r.feasible},
        {"worst_nonedge_block", {r.worst_nonedge_block.first, r.worst_nonedge_block.second}},
        {"worst_edge_block", {r.worst_edge_block.first, r.worst_edge_block.second}},
    };
}

ResidualReport residuals_from_json(const nlohmann::json& j) {
    ResidualReport r;
    r.symmetry = j.at("symmetry").get<double>();
    r.sign = j.at("sign").get<double>();
    r.psd = j.at("psd").get<double>();
    r.psd_tol = j.at("psd_tol").get<double>();
    r.nonedge_equal = j.at("nonedge_equal").get<double>();
    r.edge_zero = j.at("edge_zero").get<double>();
    r.feasible = j.at("feasible").get<bool>();
    r.worst_nonedge_block = {j.at("worst_nonedge_block")[0].get<int>(),
                             j.at("worst_nonedge_block")[1].get<int>()};
    r.worst_edge_block = {j.at("worst_edge_block")[0].get<int>(),
                          j.at("worst_edge_block")[1].get<int>()};
    return r;
}

namespace {

// The six permutations of {0,1,2} in lexicographic order.
constexpr int kPermutations[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

void require_d_coloring(const Graph& g, const Coloring& base, Edge e) {
    if (static_cast<int>(base.assignment.size()) != g.n()) {
        throw std::invalid_argument("coloring length does not match vertex count");
    }
    if (base.k != 3) {
        throw std::invalid_argument("a D-coloring uses exactly 3 colors");
    }
    for (int c : base.assignment) {
        if (c < 0 || c >= 3) throw std::invalid_argument("color index out of range");
    }
    auto mono = monochromatic_edges(g, base);
    if (mono.size() != 1 || mono[0] != e) {
        throw std::invalid_argument(
            "base is not a D-coloring with respect to (" + std::to_string(e.u) + "," +
            std::to_string(e.v) + ")");
    }
}

}  // namespace

std::array<Eigen::VectorXd, 6> d_coloring_vectors(const Graph& g, const Coloring& base) {
    if (static_cast<int>(base.assignment.size()) != g.n()) {
        throw std::invalid_argument("coloring length does not match vertex count");
    }
    const int dim = 3 * g.n() + 1;
    std::array<Eigen::VectorXd, 6> u;
    for (int k = 0; k < 6; ++k) {
        u[k] = Eigen::VectorXd::Zero(dim);
        for (int i = 0; i < g.n(); ++i) {
            u[k](3 * i + kPermutations[k][base.assignment[i]]) = 1.0;
        }
        u[k](dim - 1) = 1.0;
    }
    return u;
}

SymMatrix d_coloring_matrix(const Graph& g, const Coloring& base, Edge e) {
    e = make_edge(e.u, e.v);
    require_d_coloring(g, base, e);
    const int dim = 3 * g.n() + 1;
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(dim, dim);
    for (const Eigen::VectorXd& u : d_coloring_vectors(g, base)) {
        l += u * u.transpose();
    }
    return SymMatrix::from_dense(l);
}

VertexMatrices build_A_B_for_vertex(const Graph& k_graph, int v) {
    if (!k_graph.has_vertex(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    if (!is_d_graph(k_graph).verdict) {
        throw std::invalid_argument("build_A_B_for_vertex requires a D-graph");
    }
    VertexMatrices out;
    for (int w : k_graph.neighbors(v)) {
        Edge e = make_edge(v, w);
        auto base = find_d_coloring(k_graph, e);
        if (!base) continue;  // cannot happen on a D-graph; scan on anyway
        out.A = DColoringMatrixCert{e, *base, d_coloring_matrix(k_graph, *base, e)};

        // B: recolor v alone. Valid only if exactly one edge (necessarily
        // at v) becomes monochromatic.
        for (int alt = 0; alt < 3 && !out.B; ++alt) {
            if (alt == base->assignment[v]) continue;
            Coloring recolored = *base;
            recolored.assignment[v] = alt;
            auto mono = monochromatic_edges(k_graph, recolored);
            if (mono.size() == 1) {
                out.B = DColoringMatrixCert{mono[0], recolored,
                                            d_coloring_matrix(k_graph, recolored, mono[0])};
            }
        }
        break;
    }
    return out;
}

std::pair<SymMatrix, SymMatrix> compose_W_Y(const Composition& comp) {
    if (comp.a.size() != comp.A.size() || comp.b.size() != comp.B.size() ||
        comp.a.size() != comp.b.size() || comp.c.size() != comp.L.size()) {
        throw std::invalid_argument("composition coefficient/matrix counts disagree");
    }
    int dim = -1;
    auto check_dim = [&dim](const SymMatrix& m) {
        if (dim < 0) dim = m.dim();
        if (m.dim() != dim) throw std::invalid_argument("composition dimension mismatch");
    };
    for (const auto& m : comp.A) check_dim(m);
    for (const auto& m : comp.B) check_dim(m);
    for (const auto& m : comp.L) check_dim(m);
    if (dim < 0) throw std::invalid_argument("empty composition");

    SymMatrix w(dim), y(dim);
    for (std::size_t i = 0; i < comp.A.size(); ++i) {
        w += comp.a[i] * comp.A[i];
        w += comp.b[i] * comp.B[i];
    }
    for (std::size_t j = 0; j < comp.L.size(); ++j) {
        y += comp.c[j] * comp.L[j];
    }
    return {std::move(w), std::move(y)};
}

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
    const auto n = j.size();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != n) throw std::invalid_argument("matrix JSON is not square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = j[i][k].get<double>();
    }
    return m;
}

}  // namespace

nlohmann::json instance_to_json(const Instance& inst, const Tolerances& tols) {
    return nlohmann::json{
        {"graph", graph_to_json(inst.g)},
        {"C", matrix_to_json(inst.C.dense())},
        {"D", matrix_to_json(inst.D.dense())},
        {"P", matrix_to_json(inst.P.dense())},
        {"residuals", residuals_to_json(check_constraints(inst, tols))},
        {"objective", objective(inst)},
    };
}

Instance instance_from_json(const nlohmann::json& j) {
    Instance inst;
    inst.g = graph_from_json(j.at("graph"));
    inst.C = SymMatrix::from_dense(matrix_from_json(j.at("C")));
    inst.D = SymMatrix::from_dense(matrix_from_json(j.at("D")));
    inst.P = SymMatrix::from_dense(matrix_from_json(j.at("P")));
    return inst;
}

}  // namespace critgraph::deng
