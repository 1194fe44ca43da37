#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scramblekit/multigraph.hpp"

namespace scramblekit {

inline Multigraph path(int n) {
    if (n < 1) fail(errc::bad_param, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    return Multigraph::build(n, edges);
}

inline Multigraph cycle(int n) {
    if (n < 2) fail(errc::bad_param, "cycle needs at least two vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    edges.push_back({0, n - 1, 1}); // n = 2 collapses to the doubled edge
    return Multigraph::build(n, edges);
}

// Uniform random labeled tree via its Pruefer sequence; seed-deterministic.
inline Multigraph random_tree(int n, std::uint64_t seed) {
    if (n < 1) fail(errc::bad_param, "tree needs at least one vertex");
    if (n == 1) return Multigraph::build(1, {});
    if (n == 2) return Multigraph::build(2, {{0, 1, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(static_cast<size_t>(n) - 2);
    for (int& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : pruefer) ++deg[static_cast<size_t>(x)];
    std::vector<Edge> edges;
    std::uint64_t leaves = 0;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves |= detail::bit(v);
    for (int x : pruefer) {
        int leaf = std::countr_zero(leaves);
        leaves &= leaves - 1;
        edges.push_back({std::min(leaf, x), std::max(leaf, x), 1});
        if (--deg[static_cast<size_t>(x)] == 1) leaves |= detail::bit(x);
    }
    int a = std::countr_zero(leaves);
    leaves &= leaves - 1;
    int b = std::countr_zero(leaves);
    edges.push_back({std::min(a, b), std::max(a, b), 1});
    return Multigraph::build(n, edges);
}

inline Product grid(int m, int n) {
    if (m < 1 || n < 1) fail(errc::bad_param, "grid needs m,n >= 1");
    return cartesian_product(path(m), path(n));
}

inline Product stacked_prism(int m, int n) {
    if (m < 2 || n < 1) fail(errc::bad_param, "stacked prism needs m >= 2, n >= 1");
    return cartesian_product(cycle(m), path(n));
}

inline Product torus(int m, int n) {
    if (m < 2 || n < 2) fail(errc::bad_param, "torus needs m,n >= 2");
    return cartesian_product(cycle(m), cycle(n));
}

// Path on k vertices with every edge replaced by k parallel edges.
inline Multigraph plied_path(int k) {
    if (k < 2) fail(errc::bad_param, "plied path needs k >= 2");
    return ply(path(k), k);
}

// Doubled path on k vertices with one copy of each doubled edge subdivided
// k-1 times: a chain of k-1 loops, each of length k+1. We always subdivide
// the same copy; any choice gives an isomorphic graph.
inline Multigraph chain_of_loops(int k) {
    if (k < 2) fail(errc::bad_param, "chain of loops needs k >= 2");
    Multigraph g = ply(path(k), 2);
    for (int i = 0; i + 1 < k; ++i) {
        int tail = i; // walks along the freshly created path
        for (int step = 0; step < k - 1; ++step) {
            int fresh = g.vertex_count();
            g = subdivide_edge(g, tail, i + 1);
            tail = fresh;
        }
    }
    return g;
}

// Figure transcriptions, frozen as explicit edge lists. Ids follow the
// drawing coordinates noted next to each vertex.

// 8 vertices, 13 edges; v = 0 is the marked vertex, (2,5) the marked edge e.
//   0=(0,1)  1=(1,0)  2=(1,1)  3=(1,2)  4=(2,0)  5=(2,1)  6=(2,2)  7=(3,1)
inline Multigraph fig1_graph() {
    return Multigraph::build(8, {
        {0, 1, 1}, {0, 2, 1}, {0, 3, 1},
        {1, 2, 1}, {1, 4, 1},
        {2, 3, 1}, {2, 5, 1}, // (2,5) is the contracted edge e
        {3, 6, 1},
        {4, 5, 1}, {4, 7, 1},
        {5, 6, 1}, {5, 7, 1},
        {6, 7, 1},
    });
}

inline int fig1_marked_vertex() { return 0; }
inline Edge fig1_marked_edge() { return {2, 5, 1}; }

// contract_edge(fig1_graph, 2, 5): hub 2 plus the rim cycle 0-1-4-6-5-3-0.
//   0=(0,1)  1=(1,0)  2=(1.5,1) hub  3=(1,2)  4=(2,0)  5=(2,2)  6=(3,1)
inline Multigraph fig2_wheel() {
    return Multigraph::build(7, {
        {0, 1, 1}, {0, 2, 1}, {0, 3, 1},
        {1, 2, 1}, {1, 4, 1},
        {2, 3, 1}, {2, 4, 1}, {2, 5, 1}, {2, 6, 1},
        {3, 5, 1},
        {4, 6, 1},
        {5, 6, 1},
    });
}

// Two triangles joined by two parallel paths; 6 vertices, 8 edges.
//   0=(0,1)  1=(1,0)  2=(1,2)  3=(2,0)  4=(2,2)  5=(3,1)
inline Multigraph fig4_left() {
    return Multigraph::build(6, {
        {0, 1, 1}, {0, 2, 1}, {1, 2, 1},
        {1, 3, 1}, {2, 4, 1},
        {3, 4, 1}, {3, 5, 1}, {4, 5, 1},
    });
}

// fig4_left with the lower connecting edge (1,3) subdivided once; the new
// vertex gets id 6.
inline Multigraph fig4_right() { return subdivide_edge(fig4_left(), 1, 3); }

// Erdos-Renyi skeleton resampled until connected, multiplicities uniform in
// 1..max_mult; seed-deterministic.
inline Multigraph random_connected_multigraph(int n, double edge_prob, int max_mult,
                                              std::uint64_t seed) {
    if (n < 2) fail(errc::bad_param, "random multigraph needs n >= 2");
    if (!(edge_prob > 0.0 && edge_prob <= 1.0)) fail(errc::bad_param, "edge probability must be in (0,1]");
    if (max_mult < 1) fail(errc::bad_param, "max multiplicity must be at least 1");
    if (n > Multigraph::max_vertices) fail(errc::too_large, "engine supports at most 64 vertices");

    std::mt19937_64 rng(seed);
    const bool always = edge_prob >= 1.0;
    const std::uint64_t threshold =
        always ? 0 : static_cast<std::uint64_t>(edge_prob * 18446744073709551616.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (always || rng() < threshold) {
                    int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_mult));
                    edges.push_back({u, v, m});
                }
        try {
            return Multigraph::build(n, edges);
        } catch (const error& e) {
            if (e.code() != errc::disconnected) throw;
        }
    }
    fail(errc::bad_param, "edge probability too low to produce a connected graph");
}

} // namespace scramblekit
