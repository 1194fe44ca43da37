#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "scramblekit/families.hpp"
#include "scramblekit/multigraph.hpp"

using namespace scramblekit;

TEST_CASE("paths, cycles and random trees", "[families]") {
    CHECK(path(3).total_edge_count() == 2);
    CHECK(path(1).vertex_count() == 1);
    CHECK(cycle(4).total_edge_count() == 4);
    CHECK(cycle(2) == Multigraph::build(2, {{0, 1, 2}}));
    CHECK_THROWS_AS(path(0), error);
    CHECK_THROWS_AS(cycle(1), error);

    for (int seed = 1; seed <= 10; ++seed) {
        Multigraph t = random_tree(8, seed);
        CHECK(t == random_tree(8, seed)); // seed-deterministic
        CHECK(t.first_betti() == 0);
        CHECK(t.total_edge_count() == 7);
    }
    CHECK(random_tree(5, 1) == random_tree(5, 1));
}

TEST_CASE("product families agree with their factor products", "[families]") {
    CHECK(grid(3, 4).graph == cartesian_product(path(3), path(4)).graph);
    CHECK(stacked_prism(4, 2).graph == cartesian_product(cycle(4), path(2)).graph);
    CHECK(torus(4, 4).graph == cartesian_product(cycle(4), cycle(4)).graph);

    CHECK(grid(1, 5).graph == path(5));
    CHECK(stacked_prism(4, 2).graph.vertex_count() == 8);
    Product t44 = torus(4, 4);
    for (int v = 0; v < 16; ++v) CHECK(t44.graph.degree(v) == 4);

    CHECK_THROWS_AS(grid(0, 2), error);
    CHECK_THROWS_AS(torus(1, 3), error);
}

TEST_CASE("plied paths", "[families]") {
    CHECK(plied_path(3) == Multigraph::build(3, {{0, 1, 3}, {1, 2, 3}}));
    CHECK(plied_path(2) == Multigraph::build(2, {{0, 1, 2}}));
    CHECK(plied_path(4).vertex_count() == 4);
    CHECK(plied_path(4).total_edge_count() == 12); // 3 bundles of 4
    CHECK_THROWS_AS(plied_path(1), error);
}

TEST_CASE("chains of loops", "[families]") {
    CHECK(chain_of_loops(2) == cycle(3)); // one doubled edge, one subdivision

    for (int k = 2; k <= 5; ++k) {
        Multigraph g = chain_of_loops(k);
        CHECK(g.vertex_count() == k + (k - 1) * (k - 1));
        CHECK(g.first_betti() == k - 1); // a chain of k-1 loops
    }

    // every loop has length k+1: the two original endpoints are joined by a
    // direct edge and a k-edge path
    Multigraph g4 = chain_of_loops(4);
    CHECK(g4.vertex_count() == 13);
    for (int i = 0; i + 1 < 4; ++i) CHECK(g4.mult(i, i + 1) == 1);
}

TEST_CASE("figure transcriptions are internally consistent", "[families]") {
    Multigraph f1 = fig1_graph();
    CHECK(f1.vertex_count() == 8);
    CHECK(f1.total_edge_count() == 13);
    CHECK(fig1_marked_vertex() == 0);
    Edge e = fig1_marked_edge();
    CHECK(f1.has_edge(e.u, e.v));

    Multigraph wheel = fig2_wheel();
    CHECK(contract_edge(f1, e.u, e.v).graph == wheel);
    CHECK(wheel.vertex_count() == 7);
    CHECK(wheel.total_edge_count() == 12);
    CHECK(wheel.degree(2) == 6); // the hub sees the whole rim
    for (int v : {0, 1, 3, 4, 5, 6}) CHECK(wheel.degree(v) == 3);

    Multigraph left = fig4_left();
    CHECK(left.vertex_count() == 6);
    CHECK(left.total_edge_count() == 8);
    CHECK(fig4_right() == subdivide_edge(left, 1, 3));
    CHECK(fig4_right().vertex_count() == 7);
}

TEST_CASE("random multigraphs are seed-deterministic and in range", "[families]") {
    CHECK(random_connected_multigraph(6, 0.5, 3, 42) == random_connected_multigraph(6, 0.5, 3, 42));

    Multigraph k5 = random_connected_multigraph(5, 1.0, 1, 7);
    CHECK(k5.total_edge_count() == 10); // complete simple graph
    for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

    for (int seed = 1; seed <= 100; ++seed) {
        Multigraph g = random_connected_multigraph(6, 0.4, 3, seed);
        CHECK(g.vertex_count() == 6);
        for (const Edge& ed : g.edges()) {
            CHECK(ed.mult >= 1);
            CHECK(ed.mult <= 3);
        }
    }

    CHECK_THROWS_AS(random_connected_multigraph(1, 0.5, 1, 1), error);
    CHECK_THROWS_AS(random_connected_multigraph(4, 0.0, 1, 1), error);
    CHECK_THROWS_AS(random_connected_multigraph(4, 0.5, 0, 1), error);
}
