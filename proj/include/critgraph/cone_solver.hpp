#ifndef CRITGRAPH_CONE_SOLVER_HPP
#define CRITGRAPH_CONE_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "critgraph/deng_program.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/sym_matrix.hpp"
#include "json.hpp"

namespace critgraph::solver {

struct SolveConfig {
    int max_iters = 5000;
    int restarts = 8;
    double step0 = 0.1;       // step at iteration t is step0 / sqrt(t)
    double rho = 1.0;         // Frobenius radius of the (D, P) search slice
    double delta = 1e-6;      // negativity threshold for a ray verdict
    int inner_cap = 500;      // projection cycles per call
    std::uint64_t seed = 0;
    int jobs = 1;             // parallel restarts
    deng::Tolerances tols{};
};

nlohmann::json config_to_json(const SolveConfig& cfg);
SolveConfig config_from_json(const nlohmann::json& j);

/// Nearest PSD matrix in Frobenius norm: eigenvalues clipped at zero.
SymMatrix project_psd(const SymMatrix& m);

struct ProjectionResult {
    deng::ResidualReport residuals;  // full check of the final point
    int cycles = 0;
    bool converged = false;
};

/// Cyclic projections onto the program's constraint sets: symmetrize,
/// average non-edge blocks of D, zero edge blocks of P, clamp P to
/// nonpositive, then project D+P onto the PSD cone with the correction
/// split evenly between D and P. Stops when the post-cycle residuals
/// drop below tolerance or after inner_cap cycles; non-convergence is
/// reported, not fatal. residual_trace, when given, records the joint
/// residual after each cycle.
ProjectionResult project_phi(const Graph& g, Eigen::MatrixXd& d, Eigen::MatrixXd& p,
                             const deng::Tolerances& tols = {}, int inner_cap = 500,
                             std::vector<double>* residual_trace = nullptr);

enum class RayVerdict { negative_ray_found, no_ray_found_within_budget };

std::string to_string(RayVerdict v);
RayVerdict ray_verdict_from_string(const std::string& s);

/// Because the constraints form a cone, a feasible point with negative
/// objective scales to arbitrarily negative values; the certificate
/// carries such a point, or the best budgeted attempt.
struct RayCertificate {
    RayVerdict verdict = RayVerdict::no_ray_found_within_budget;
    SymMatrix D, P;
    double objective = 0.0;
    deng::ResidualReport residuals;
    SolveConfig config;
    int restart_index = -1;  // -1 when the zero point is the certificate
};

/// Projected subgradient descent on C . D over the feasible cone
/// intersected with the Frobenius ball of radius rho, restarted from
/// seeded Gaussian initializations. Verdict negative_ray_found requires a
/// point that passes an independent check_constraints with objective
/// below -delta; anything else is no_ray_found_within_budget, which is a
/// budget statement, not a boundedness proof. Deterministic for a fixed
/// config; restarts may run in parallel (cfg.jobs), merged by objective
/// then restart index.
RayCertificate find_negative_ray(const Graph& g, const SolveConfig& cfg = {});

/// Certificate JSON (without matrices; the CLI stores those as CSV).
nlohmann::json certificate_to_json(const RayCertificate& cert);

}  // namespace critgraph::solver

#endif
