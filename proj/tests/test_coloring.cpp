#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "critgraph/coloring.hpp"
#include "critgraph/families.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace critgraph;
using testutil::triangle;

TEST_CASE("is_proper") {
    Graph tri = triangle();
    CHECK(is_proper(tri, Coloring{3, {0, 1, 2}}));
    CHECK_FALSE(is_proper(tri, Coloring{3, {0, 0, 1}}));
    CHECK_THROWS_AS(is_proper(tri, Coloring{3, {0, 1}}), std::invalid_argument);

    auto c = find_coloring(families::moser_spindle(), 4);
    REQUIRE(c.has_value());
    CHECK(is_proper(families::moser_spindle(), *c));
}

TEST_CASE("is_k_colorable on the named graphs") {
    CHECK_FALSE(is_k_colorable(families::moser_spindle(), 3));
    Graph f2 = families::thomas_walls(2);
    CHECK_FALSE(is_k_colorable(f2, 3));
    CHECK(is_k_colorable(f2, 4));
    CHECK(is_k_colorable(Graph(5, {}), 1));
    CHECK_FALSE(is_k_colorable(Graph(1, {}), 0));
    CHECK(is_k_colorable(Graph(0, {}), 0));
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(families::k4()) == 4);
    for (int n = 0; n <= 3; ++n) {
        CHECK(chromatic_number(families::thomas_walls(n)) == 4);
    }
    CHECK(chromatic_number(families::add_degree3_edge(families::moser_spindle()).first) == 4);
    CHECK(chromatic_number(Graph(0, {})) == 0);
    CHECK(chromatic_number(Graph(3, {})) == 1);
}

TEST_CASE("find_coloring determinism and witnesses") {
    auto tri = find_coloring(triangle(), 3);
    REQUIRE(tri.has_value());
    CHECK(tri->assignment == std::vector<int>{0, 1, 2});  // first-fit order

    CHECK_FALSE(find_coloring(families::k4(), 3).has_value());

    auto f1 = find_coloring(families::thomas_walls(1), 4);
    REQUIRE(f1.has_value());
    CHECK(is_proper(families::thomas_walls(1), *f1));
}

TEST_CASE("witness iff decision, and monotonicity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(3 + static_cast<int>(rng() % 5), 0.5, rng);
        bool prev = false;
        for (int k = 0; k <= g.n() + 1; ++k) {
            auto witness = find_coloring(g, k);
            CHECK(witness.has_value() == is_k_colorable(g, k));
            if (witness) {
                CHECK(is_proper(g, *witness));
                CHECK(witness->k == k);
            }
            if (prev) CHECK(witness.has_value());  // k-colorable implies (k+1)-colorable
            prev = witness.has_value();
        }
        CHECK(is_k_colorable(g, g.n()));
    }
}

TEST_CASE("backtracker agrees with naive enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
        CHECK(chromatic_number(g) == testutil::naive_chromatic_number(g));
    }
}

TEST_CASE("v-critical colorings") {
    Graph f1 = families::thomas_walls(1);
    for (int v = 0; v < f1.n(); ++v) {
        auto c = find_v_critical_coloring(f1, v);
        REQUIRE(c.has_value());
        CHECK(c->k == 4);
        CHECK(is_proper(f1, *c));
        int count3 = 0;
        for (int w = 0; w < f1.n(); ++w) count3 += c->assignment[w] == 3;
        CHECK(count3 == 1);
        CHECK(c->assignment[v] == 3);
    }
    Graph k4 = families::k4();
    for (int v = 0; v < 4; ++v) CHECK(find_v_critical_coloring(k4, v).has_value());
    CHECK_THROWS_AS(find_v_critical_coloring(k4, 9), std::out_of_range);

    // succeeds exactly when g minus v is 3-colorable
    Graph tri = triangle();
    auto c = find_v_critical_coloring(tri, 0);
    REQUIRE(c.has_value());
    CHECK(is_proper(tri, *c));
}

TEST_CASE("d-colorings") {
    Graph k4 = families::k4();
    for (const Edge& e : k4.edges()) {
        auto c = find_d_coloring(k4, e);
        REQUIRE(c.has_value());
        auto mono = monochromatic_edges(k4, *c);
        REQUIRE(mono.size() == 1);
        CHECK(mono[0] == e);
        CHECK(c->assignment[e.u] == 0);  // shared color pinned to 0
        CHECK(c->assignment[e.v] == 0);
    }
    Graph moser = families::moser_spindle();
    for (const Edge& e : moser.edges()) {
        auto c = find_d_coloring(moser, e);
        REQUIRE(c.has_value());
        auto mono = monochromatic_edges(moser, *c);
        REQUIRE(mono.size() == 1);
        CHECK(mono[0] == e);
    }
    Graph tri = triangle();
    CHECK(find_d_coloring(tri, {0, 1}).has_value());
    CHECK_THROWS_AS(find_d_coloring(tri, {0, 4}), std::invalid_argument);
}

TEST_CASE("oracle cap") {
    Graph big(25, {});
    CHECK_THROWS_AS(is_k_colorable(big, 2), std::invalid_argument);
    CHECK_THROWS_AS(chromatic_number(big), std::invalid_argument);
}
