#ifndef CRITGRAPH_DENG_PROGRAM_HPP
#define CRITGRAPH_DENG_PROGRAM_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/sym_matrix.hpp"
#include "json.hpp"

namespace critgraph::deng {

struct Tolerances {
    double eq = 1e-9;        // linear constraints (block equality / zeroing)
    double sign = 1e-9;      // nonpositivity of P
    double psd_rel = 1e-8;   // PSD slack, scaled by 1 + |lambda|_max
};

/// Objective matrix: (3n+1) x (3n+1); corner entry 6, last row and column 4,
/// every other entry 1.
SymMatrix build_C(int n);

/// The convex program for a graph of max degree <= 4: variables (D, P) of
/// dimension 3n+1, objective C . D, constraints:
///   1. D, P symmetric
///   2. P entrywise nonpositive
///   3. P + D positive semidefinite
///   4. (v_i,v_j) not an edge (including i = j): the nine entries of block
///      D_{i,j} are all equal
///   5. (v_i,v_j) an edge: block P_{i,j} is zero
/// Border row/column and corner blocks carry only symmetry (and, for P,
/// nonpositivity).
struct Instance {
    Graph g;
    SymMatrix C, D, P;

    int dim() const { return 3 * g.n() + 1; }
};

/// Fresh instance at the zero point (which is always feasible).
Instance make_instance(Graph g);

double objective(const SymMatrix& C, const SymMatrix& D);
double objective(const Instance& inst);

struct ResidualReport {
    double symmetry = 0.0;       // constraint 1, max |M - M^T| over D and P
    double sign = 0.0;           // constraint 2, max positive entry of P
    double psd = 0.0;            // constraint 3, max(0, -lambda_min(D+P))
    double psd_tol = 0.0;        // resolved tolerance: psd_rel * (1 + |lambda|_max)
    double nonedge_equal = 0.0;  // constraint 4, max in-block deviation
    double edge_zero = 0.0;      // constraint 5, max |entry| over edge blocks of P
    bool feasible = false;
    std::pair<int, int> worst_nonedge_block{-1, -1};
    std::pair<int, int> worst_edge_block{-1, -1};

    double max_residual() const;
};

/// Residuals measured on raw dense matrices, so asymmetric or otherwise
/// malformed serialized inputs are caught.
ResidualReport check_constraints(const Graph& g, const Eigen::MatrixXd& D,
                                 const Eigen::MatrixXd& P, const Tolerances& tols = {});
ResidualReport check_constraints(const Instance& inst, const Tolerances& tols = {});

nlohmann::json residuals_to_json(const ResidualReport& r);
ResidualReport residuals_from_json(const nlohmann::json& j);

/// The six indicator vectors u_k of a D-coloring, one per permutation of
/// the three colors: u_k has a 1 at position 3i + pi_k(color(i)) for each
/// vertex i and a trailing 1.
std::array<Eigen::VectorXd, 6> d_coloring_vectors(const Graph& g, const Coloring& base);

/// D-coloring matrix L = sum_k u_k u_k^T for a base D-coloring with
/// respect to e. For any X = [x_1 y_1 z_1 ... 1], X L X^T equals the sum
/// over the six color permutations of (1 + sum_i indicator . X_i)^2.
/// L is PSD of rank <= 6 with corner entry 6. Errors unless base is a
/// valid D-coloring of g with respect to e.
SymMatrix d_coloring_matrix(const Graph& g, const Coloring& base, Edge e);

struct DColoringMatrixCert {
    Edge edge;       // the unique monochromatic edge
    Coloring base;
    SymMatrix L;
};

struct VertexMatrices {
    std::optional<DColoringMatrixCert> A;  // D-coloring matrix for an edge at v
    std::optional<DColoringMatrixCert> B;  // recoloring of v alone, when valid
};

/// For a vertex of a D-graph: A from the first incident edge (in
/// lexicographic order) admitting a D-coloring; B from recoloring v alone
/// when that yields another valid D-coloring. Components that do not
/// exist are left empty rather than fabricated.
VertexMatrices build_A_B_for_vertex(const Graph& k_graph, int v);

struct Composition {
    std::vector<double> a, b;     // per-vertex coefficients
    std::vector<SymMatrix> A, B;  // per-vertex matrices
    std::vector<double> c;        // per-edge coefficients
    std::vector<SymMatrix> L;     // per-edge matrices
};

/// W = sum_i (a_i A_i + b_i B_i), Y = sum_j c_j L_j.
std::pair<SymMatrix, SymMatrix> compose_W_Y(const Composition& comp);

/// Bundle: {graph, C, D, P, residuals, objective}.
nlohmann::json instance_to_json(const Instance& inst, const Tolerances& tols = {});
Instance instance_from_json(const nlohmann::json& j);

}  // namespace critgraph::deng

#endif
