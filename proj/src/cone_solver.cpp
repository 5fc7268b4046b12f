#include "critgraph/cone_solver.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

namespace critgraph::solver {

nlohmann::json config_to_json(const SolveConfig& cfg) {
    return nlohmann::json{
        {"max_iters", cfg.max_iters}, {"restarts", cfg.restarts},
        {"step0", cfg.step0},         {"rho", cfg.rho},
        {"delta", cfg.delta},         {"inner_cap", cfg.inner_cap},
        {"seed", cfg.seed},           {"jobs", cfg.jobs},
        {"tol_eq", cfg.tols.eq},      {"tol_sign", cfg.tols.sign},
        {"tol_psd_rel", cfg.tols.psd_rel},
    };
}

SolveConfig config_from_json(const nlohmann::json& j) {
    SolveConfig cfg;
    cfg.max_iters = j.at("max_iters").get<int>();
    cfg.restarts = j.at("restarts").get<int>();
    cfg.step0 = j.at("step0").get<double>();
    cfg.rho = j.at("rho").get<double>();
    cfg.delta = j.at("delta").get<double>();
    cfg.inner_cap = j.at("inner_cap").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.jobs = j.at("jobs").get<int>();
    cfg.tols.eq = j.at("tol_eq").get<double>();
    cfg.tols.sign = j.at("tol_sign").get<double>();
    cfg.tols.psd_rel = j.at("tol_psd_rel").get<double>();
    return cfg;
}

std::string to_string(RayVerdict v) {
    return v == RayVerdict::negative_ray_found ? "negative-ray-found"
                                               : "no-ray-found-within-budget";
}

RayVerdict ray_verdict_from_string(const std::string& s) {
    if (s == "negative-ray-found") return RayVerdict::negative_ray_found;
    if (s == "no-ray-found-within-budget") return RayVerdict::no_ray_found_within_budget;
    throw std::invalid_argument("unknown ray verdict: " + s);
}

namespace {

Eigen::MatrixXd clip_negative_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue computation failed");
    }
    Eigen::VectorXd lambda = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * lambda.asDiagonal() * solver.eigenvectors().transpose();
}

// Linear residuals only (constraints 2, 4, 5); the PSD residual is zero
// by construction right after the PSD split.
double linear_residual(const Graph& g, const Eigen::MatrixXd& d, const Eigen::MatrixXd& p) {
    const int n = g.n();
    double worst = std::max(0.0, p.maxCoeff());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (!g.has_edge(i, j)) {
                double lo = d(3 * i, 3 * j), hi = lo;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        double v = d(3 * i + a, 3 * j + b);
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                }
                worst = std::max(worst, hi - lo);
            } else {
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        worst = std::max(worst, std::abs(p(3 * i + a, 3 * j + b)));
                    }
                }
            }
        }
    }
    return worst;
}

void symmetrize(Eigen::MatrixXd& m) {
    m = 0.5 * (m + m.transpose()).eval();
}

// Projections onto the linear/sign constraint sets, in place.
void project_linear(const Graph& g, Eigen::MatrixXd& d, Eigen::MatrixXd& p) {
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (!g.has_edge(i, j)) {
                double mean = 0.0;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) mean += d(3 * i + a, 3 * j + b);
                }
                mean /= 9.0;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        d(3 * i + a, 3 * j + b) = mean;
                        d(3 * j + b, 3 * i + a) = mean;
                    }
                }
            } else {
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        p(3 * i + a, 3 * j + b) = 0.0;
                        p(3 * j + b, 3 * i + a) = 0.0;
                    }
                }
            }
        }
    }
    p = p.cwiseMin(0.0);
}

}  // namespace

SymMatrix project_psd(const SymMatrix& m) {
    return SymMatrix::from_dense(clip_negative_eigenvalues(m.dense()));
}

ProjectionResult project_phi(const Graph& g, Eigen::MatrixXd& d, Eigen::MatrixXd& p,
                             const deng::Tolerances& tols, int inner_cap,
                             std::vector<double>* residual_trace) {
    const int dim = 3 * g.n() + 1;
    if (d.rows() != dim || d.cols() != dim || p.rows() != dim || p.cols() != dim) {
        throw std::invalid_argument("projection input has wrong dimension");
    }
    ProjectionResult result;
    symmetrize(d);
    symmetrize(p);
    double tol = std::min(tols.eq, tols.sign);
    for (int cycle = 0; cycle < inner_cap; ++cycle) {
        project_linear(g, d, p);
        Eigen::MatrixXd sum = d + p;
        symmetrize(sum);
        Eigen::MatrixXd correction = 0.5 * (clip_negative_eigenvalues(sum) - sum);
        d += correction;
        p += correction;
        ++result.cycles;
        double res = linear_residual(g, d, p);
        if (residual_trace) residual_trace->push_back(res);
        if (res <= tol) {
            result.converged = true;
            break;
        }
    }
    result.residuals = deng::check_constraints(g, d, p, tols);
    return result;
}

namespace {

struct BestPoint {
    bool has_value = false;
    Eigen::MatrixXd d, p;
    double objective = 0.0;
    deng::ResidualReport residuals;
    int restart_index = -1;
};

BestPoint run_restart(const Graph& g, const Eigen::MatrixXd& c, const SolveConfig& cfg,
                      int restart) {
    const int dim = 3 * g.n() + 1;
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::MatrixXd d(dim, dim), p(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            d(i, j) = gauss(rng);
            p(i, j) = gauss(rng);
        }
    }
    symmetrize(d);
    symmetrize(p);

    BestPoint best;
    best.restart_index = restart;
    auto clip_to_ball = [&](Eigen::MatrixXd& dd, Eigen::MatrixXd& pp) {
        double norm = std::sqrt(dd.squaredNorm() + pp.squaredNorm());
        if (norm > cfg.rho) {
            double s = cfg.rho / norm;
            dd *= s;
            pp *= s;
        }
    };
    // Radial scaling stays inside the cone and shrinks every residual, so
    // feasibility established by the projection survives the clip.
    auto consider = [&](const deng::ResidualReport& res) {
        if (!res.feasible) return;
        double obj = c.cwiseProduct(d).sum();
        if (!best.has_value || obj < best.objective) {
            best.has_value = true;
            best.d = d;
            best.p = p;
            best.objective = obj;
            best.residuals = res;
        }
    };

    ProjectionResult proj = project_phi(g, d, p, cfg.tols, cfg.inner_cap);
    clip_to_ball(d, p);
    consider(proj.residuals);

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        double step = cfg.step0 / std::sqrt(static_cast<double>(iter));
        d -= step * c;
        proj = project_phi(g, d, p, cfg.tols, cfg.inner_cap);
        clip_to_ball(d, p);
        consider(proj.residuals);
    }
    return best;
}

}  // namespace

RayCertificate find_negative_ray(const Graph& g, const SolveConfig& cfg) {
    if (max_degree(g) > 4) {
        throw std::invalid_argument("the program is defined for graphs of max degree <= 4");
    }
    if (g.n() < 1) throw std::invalid_argument("graph is empty");
    if (cfg.max_iters < 0 || cfg.restarts < 0 || cfg.rho <= 0 || cfg.delta <= 0) {
        throw std::invalid_argument("bad solver configuration");
    }
    const int dim = 3 * g.n() + 1;
    const Eigen::MatrixXd c = deng::build_C(g.n()).dense();

    // The zero point is always feasible with objective 0; it is both the
    // fallback certificate and the bar every restart has to beat.
    RayCertificate cert;
    cert.config = cfg;
    cert.D = SymMatrix(dim);
    cert.P = SymMatrix(dim);
    cert.objective = 0.0;
    cert.residuals = deng::check_constraints(g, cert.D.dense(), cert.P.dense(), cfg.tols);
    cert.restart_index = -1;

    if (cfg.max_iters > 0 && cfg.restarts > 0) {
        std::vector<BestPoint> results(cfg.restarts);
        if (cfg.jobs > 1) {
            std::vector<std::future<BestPoint>> futures;
            for (int r = 0; r < cfg.restarts; ++r) {
                futures.push_back(std::async(std::launch::async,
                                             [&, r] { return run_restart(g, c, cfg, r); }));
            }
            for (int r = 0; r < cfg.restarts; ++r) results[r] = futures[r].get();
        } else {
            for (int r = 0; r < cfg.restarts; ++r) results[r] = run_restart(g, c, cfg, r);
        }
        for (const BestPoint& bp : results) {  // ascending restart index: ties keep lowest
            if (bp.has_value && bp.objective < cert.objective) {
                cert.D = SymMatrix::from_dense(bp.d);
                cert.P = SymMatrix::from_dense(bp.p);
                cert.objective = bp.objective;
                cert.residuals = bp.residuals;
                cert.restart_index = bp.restart_index;
            }
        }
    }

    // Independent re-verification of whatever is being certified.
    cert.residuals = deng::check_constraints(g, cert.D.dense(), cert.P.dense(), cfg.tols);
    cert.objective = deng::objective(deng::build_C(g.n()), cert.D);
    cert.verdict = (cert.residuals.feasible && cert.objective < -cfg.delta)
                       ? RayVerdict::negative_ray_found
                       : RayVerdict::no_ray_found_within_budget;
    return cert;
}

nlohmann::json certificate_to_json(const RayCertificate& cert) {
    return nlohmann::json{
        {"verdict", to_string(cert.verdict)},
        {"objective", cert.objective},
        {"residuals", deng::residuals_to_json(cert.residuals)},
        {"config", config_to_json(cert.config)},
        {"seed", cert.config.seed},
        {"restart_index", cert.restart_index},
    };
}

}  // namespace critgraph::solver
