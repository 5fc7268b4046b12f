#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <random>

#include "critgraph/deng_program.hpp"
#include "critgraph/families.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace critgraph;
using namespace critgraph::deng;
using testutil::triangle;

namespace {

// Route-independent oracle for the D-coloring matrix identity: expands the
// sum of six squared affine forms directly from the permuted indicators,
// never touching d_coloring_matrix.
double sum_of_six_squares(const Graph& g, const Coloring& base, const Eigen::VectorXd& x) {
    std::array<int, 3> perm{0, 1, 2};
    double total = 0.0;
    do {
        double affine = 1.0;
        for (int i = 0; i < g.n(); ++i) {
            affine += x(3 * i + perm[base.assignment[i]]);
        }
        total += affine * affine;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Structured vector: constant on each vertex triple, arbitrary tail.
Eigen::VectorXd per_vertex_vector(const std::vector<double>& a, double tail) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(3 * a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int c = 0; c < 3; ++c) x(3 * i + c) = a[i];
    }
    x(3 * a.size()) = tail;
    return x;
}

int numerical_rank(const SymMatrix& m) {
    Eigen::VectorXd eig = m.eigenvalues();
    double cutoff = 1e-8 * std::max(1.0, eig.cwiseAbs().maxCoeff());
    return static_cast<int>((eig.array() > cutoff).count());
}

}  // namespace

TEST_CASE("objective matrix C") {
    SymMatrix c = build_C(1);
    REQUIRE(c.dim() == 4);
    CHECK(c(3, 3) == 6.0);
    for (int i = 0; i < 3; ++i) {
        CHECK(c(i, 3) == 4.0);
        CHECK(c(3, i) == 4.0);
        for (int j = 0; j < 3; ++j) CHECK(c(i, j) == 1.0);
    }
    CHECK(c.dense().sum() == 39.0);  // 9*1 + 6*4 + 6

    for (int n : {2, 5}) {
        SymMatrix cn = build_C(n);
        CHECK(cn.dense() == cn.dense().transpose().eval());
    }
    CHECK_THROWS_AS(build_C(0), std::invalid_argument);
}

TEST_CASE("objective values") {
    Graph tri = triangle();
    Instance inst = make_instance(tri);
    CHECK(objective(inst) == 0.0);  // zero matrix

    int dim = inst.dim();
    SymMatrix identity = SymMatrix::from_dense(Eigen::MatrixXd::Identity(dim, dim));
    CHECK(objective(inst.C, identity) == 3 * tri.n() + 6.0);  // trace of C

    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd raw(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) raw(i, j) = gauss(rng);
    SymMatrix d = SymMatrix::from_dense(raw);
    double base = objective(inst.C, d);
    CHECK(objective(inst.C, 2.0 * d) == doctest::Approx(2.0 * base).epsilon(1e-12));

    SymMatrix wrong(dim + 3);
    CHECK_THROWS_AS(objective(inst.C, wrong), std::invalid_argument);
}

TEST_CASE("constraint residuals") {
    Graph tri = triangle();
    Instance inst = make_instance(tri);

    auto zero = check_constraints(inst);
    CHECK(zero.feasible);
    CHECK(zero.max_residual() == 0.0);

    // a positive entry of P is exactly the sign residual
    Instance bad = inst;
    bad.P.set(0, 1, 0.25);
    auto r = check_constraints(bad);
    CHECK(r.sign == 0.25);
    CHECK_FALSE(r.feasible);

    // unequal non-edge (here diagonal) block of D: residual is the spread
    Graph p2(2, {{0, 1}});
    Instance inst2 = make_instance(p2);
    inst2.D.set(0, 1, 0.5);
    inst2.D.set(0, 2, -0.1);
    auto r2 = check_constraints(inst2);
    CHECK(r2.nonedge_equal == doctest::Approx(0.6));
    CHECK(r2.worst_nonedge_block == std::pair<int, int>{0, 0});

    // edge block of P must vanish
    inst2 = make_instance(p2);
    inst2.P.set(1, 4, -0.3);  // block (0,1) is the edge
    auto r3 = check_constraints(inst2);
    CHECK(r3.edge_zero == doctest::Approx(0.3));
    CHECK(r3.worst_edge_block == std::pair<int, int>{0, 1});

    // asymmetric raw input is caught
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(7, 7), p = d;
    d(0, 1) = 1.0;
    auto r4 = check_constraints(p2, d, p);
    CHECK(r4.symmetry == 1.0);
    CHECK_FALSE(r4.feasible);

    CHECK_THROWS_AS(check_constraints(tri, d, p), std::invalid_argument);  // dim mismatch
    CHECK_THROWS_AS(make_instance(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})),
                    std::invalid_argument);  // degree 5
}

TEST_CASE("cone property on exactly feasible points") {
    // D = w w^T with w constant on vertex triples satisfies constraint 4
    // with zero deviation; P = 0 covers the rest.
    Graph moser = families::moser_spindle();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> a(moser.n());
        for (double& v : a) v = unif(rng);
        Eigen::VectorXd w = per_vertex_vector(a, unif(rng));
        Eigen::MatrixXd d0 = w * w.transpose();
        Eigen::MatrixXd p0 = Eigen::MatrixXd::Zero(d0.rows(), d0.cols());
        SymMatrix c = build_C(moser.n());
        double base_obj = objective(c, SymMatrix::from_dense(d0));
        for (double t : {0.0, 0.5, 2.0, 10.0}) {
            Eigen::MatrixXd dt = t * d0, pt = t * p0;
            auto r = check_constraints(moser, dt, pt);
            CHECK(r.feasible);
            CHECK(r.nonedge_equal <= 1e-12 * std::max(1.0, t));
            double obj = objective(c, SymMatrix::from_dense(dt));
            CHECK(obj == doctest::Approx(t * base_obj).epsilon(1e-9));
        }
    }

    // Nonzero P: support the vector on an independent set, so P's edge
    // blocks vanish; D = v v^T, P = -beta v v^T, D + P still PSD.
    Graph p3 = testutil::path(3);
    Eigen::VectorXd v = per_vertex_vector({0.7, 0.0, 0.4}, 0.9);
    Eigen::MatrixXd d0 = v * v.transpose();
    Eigen::MatrixXd p0 = -0.5 * d0;
    for (double t : {0.0, 0.5, 2.0, 10.0}) {
        Eigen::MatrixXd dt = t * d0, pt = t * p0;
        auto r = check_constraints(p3, dt, pt);
        CHECK(r.feasible);
    }
}

TEST_CASE("structured rank-one points expose the objective's indefiniteness") {
    // With w constant per triple and trailing value t, f(w w^T) is
    // u^2 + 8ut + 6t^2 for u = 3 * sum(a_i): indefinite, so every graph
    // admits exactly feasible points with strictly negative objective.
    // The acceptance probe over the solver observes the same fact.
    for (const Graph& g : {triangle(), families::k4(), testutil::path(4)}) {
        std::vector<double> a(g.n(), -4.0 / (3.0 * g.n()));  // u = -4
        Eigen::VectorXd w = per_vertex_vector(a, 1.0);
        Eigen::MatrixXd d = w * w.transpose();
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d.rows(), d.cols());
        auto r = check_constraints(g, d, p);
        CHECK(r.feasible);
        double obj = objective(build_C(g.n()), SymMatrix::from_dense(d));
        CHECK(obj == doctest::Approx(-10.0).epsilon(1e-9));  // 16 - 32 + 6
    }
}

TEST_CASE("d-coloring matrix") {
    Graph moser = families::moser_spindle();
    std::mt19937_64 rng(29);
    std::normal_distribution<double> gauss;

    for (const Edge& e : moser.edges()) {
        auto base = find_d_coloring(moser, e);
        REQUIRE(base.has_value());
        SymMatrix l = d_coloring_matrix(moser, *base, e);
        CHECK(l.dim() == 3 * moser.n() + 1);
        CHECK(l(l.dim() - 1, l.dim() - 1) == 6.0);
        CHECK(l.min_eigenvalue() >= -1e-10);
        CHECK(numerical_rank(l) <= 6);

        for (int trial = 0; trial < 50; ++trial) {
            Eigen::VectorXd x(l.dim());
            for (int i = 0; i < l.dim() - 1; ++i) x(i) = gauss(rng);
            x(l.dim() - 1) = 1.0;
            double quad = x.dot(l.dense() * x);
            double expanded = sum_of_six_squares(moser, *base, x);
            CHECK(quad == doctest::Approx(expanded).epsilon(1e-9));
        }
    }
}

TEST_CASE("d-coloring matrix is permutation-order invariant") {
    Graph k4 = families::k4();
    Edge e{0, 1};
    auto base = find_d_coloring(k4, e);
    REQUIRE(base.has_value());
    SymMatrix l = d_coloring_matrix(k4, *base, e);

    // rebuild from the vectors in reversed enumeration order; entries are
    // small integers, so equality is exact
    auto u = d_coloring_vectors(k4, *base);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(l.dim(), l.dim());
    for (int k = 5; k >= 0; --k) acc += u[k] * u[k].transpose();
    CHECK(acc == l.dense());
}

TEST_CASE("d-coloring matrix validation") {
    Graph tri = triangle();
    CHECK_THROWS_AS(d_coloring_matrix(tri, Coloring{3, {0, 1, 2}}, {0, 1}),
                    std::invalid_argument);  // proper coloring, no mono edge
    CHECK_THROWS_AS(d_coloring_matrix(tri, Coloring{3, {0, 0, 0}}, {0, 1}),
                    std::invalid_argument);  // three mono edges
    CHECK_THROWS_AS(d_coloring_matrix(tri, Coloring{4, {0, 0, 1}}, {0, 1}),
                    std::invalid_argument);  // wrong color count
    auto base = find_d_coloring(tri, {0, 1});
    REQUIRE(base.has_value());
    CHECK_THROWS_AS(d_coloring_matrix(tri, *base, {0, 2}), std::invalid_argument);
}

TEST_CASE("A and B matrices per vertex") {
    Graph moser = families::moser_spindle();
    for (int v = 0; v < moser.n(); ++v) {
        VertexMatrices vm = build_A_B_for_vertex(moser, v);
        REQUIRE(vm.A.has_value());
        REQUIRE(vm.B.has_value());
        CHECK((vm.A->edge.u == v || vm.A->edge.v == v));  // incident to v
        CHECK(vm.A->L.min_eigenvalue() >= -1e-10);
        CHECK(vm.B->L.min_eigenvalue() >= -1e-10);
        // B really does differ from A in vertex v only
        int diffs = 0;
        for (int w = 0; w < moser.n(); ++w) {
            diffs += vm.A->base.assignment[w] != vm.B->base.assignment[w];
        }
        CHECK(diffs == 1);
        CHECK(vm.A->base.assignment[v] != vm.B->base.assignment[v]);
    }
    CHECK_THROWS_AS(build_A_B_for_vertex(triangle(), 0), std::invalid_argument);
}

TEST_CASE("compose W and Y") {
    Graph k4 = families::k4();
    std::vector<SymMatrix> ls;
    for (const Edge& e : k4.edges()) {
        auto base = find_d_coloring(k4, e);
        REQUIRE(base.has_value());
        ls.push_back(d_coloring_matrix(k4, *base, e));
    }
    Composition comp;
    comp.A = {ls[0], ls[1]};
    comp.B = {ls[2], ls[3]};
    comp.a = {0.0, 0.0};
    comp.b = {0.0, 0.0};
    comp.L = ls;
    comp.c = std::vector<double>(ls.size(), 0.0);

    auto [w0, y0] = compose_W_Y(comp);
    CHECK(w0.dense().isZero(0.0));
    CHECK(y0.dense().isZero(0.0));

    comp.a = {1.0, 0.0};
    auto [w1, y1] = compose_W_Y(comp);
    CHECK(w1.dense() == ls[0].dense());

    comp.a = {0.25, -2.0};
    comp.b = {1.5, 0.5};
    comp.c[2] = 3.0;
    auto [w2, y2] = compose_W_Y(comp);
    CHECK(w2.dense() == w2.dense().transpose().eval());
    CHECK(y2.dense() == (3.0 * ls[2].dense()));

    Composition bad = comp;
    bad.c.pop_back();
    CHECK_THROWS_AS(compose_W_Y(bad), std::invalid_argument);
}

TEST_CASE("instance bundle json") {
    Instance inst = make_instance(families::k4());
    inst.D.set(0, 0, 0.5);
    auto j = instance_to_json(inst);
    CHECK(j.at("objective").get<double>() == objective(inst));
    Instance back = instance_from_json(j);
    CHECK(back.g == inst.g);
    CHECK(back.C == inst.C);
    CHECK(back.D == inst.D);
    CHECK(back.P == inst.P);
}
