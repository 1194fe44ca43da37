#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "scramblekit/error.hpp"
#include "scramblekit/vertex_set.hpp"

namespace scramblekit {

struct Edge {
    int u = 0;
    int v = 0;
    int mult = 1;

    bool operator==(const Edge& o) const { return u == o.u && v == o.v && mult == o.mult; }
};

// Loopless connected multigraph on dense vertex ids 0..n-1. Multiplicities
// are stored in a symmetric n x n table; adjacency is mirrored into per-vertex
// bitmasks for the subset algorithms. Instances are immutable after build();
// every structural edit returns a new graph.
class Multigraph {
public:
    static constexpr int max_vertices = 64;

    static Multigraph build(int n, const std::vector<Edge>& edges) {
        if (n <= 0) fail(errc::empty_graph, "graph needs at least one vertex");
        if (n > max_vertices)
            fail(errc::too_large, "engine supports at most 64 vertices");
        Multigraph g(n);
        for (const Edge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                fail(errc::bad_param, "edge endpoint out of range");
            if (e.u == e.v) fail(errc::loop_edge, "loops are not allowed");
            if (e.mult < 1) fail(errc::bad_param, "edge multiplicity must be positive");
            g.add_mult(e.u, e.v, e.mult);
        }
        g.finish();
        if (!g.connected()) fail(errc::disconnected, "graph must be connected");
        return g;
    }

    int vertex_count() const { return n_; }

    int mult(int u, int v) const { return mult_[static_cast<size_t>(u) * n_ + v]; }

    int degree(int v) const { return degree_[v]; }

    // Total number of edges counted with multiplicity.
    int total_edge_count() const { return total_edges_; }

    std::uint64_t adjacency_mask(int v) const { return adj_[v]; }

    // Edges as (u < v, mult) triples in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (mult(u, v) > 0) out.push_back({u, v, mult(u, v)});
        return out;
    }

    bool has_edge(int u, int v) const {
        return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v && mult(u, v) > 0;
    }

    int first_betti() const { return total_edges_ - n_ + 1; }

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && mult_ == o.mult_; }
    bool operator!=(const Multigraph& o) const { return !(*this == o); }

private:
    explicit Multigraph(int n)
        : n_(n), mult_(static_cast<size_t>(n) * n, 0), adj_(n, 0), degree_(n, 0) {}

    void add_mult(int u, int v, int m) {
        mult_[static_cast<size_t>(u) * n_ + v] += m;
        mult_[static_cast<size_t>(v) * n_ + u] += m;
    }

    void finish() {
        total_edges_ = 0;
        for (int u = 0; u < n_; ++u) {
            int deg = 0;
            std::uint64_t mask = 0;
            for (int v = 0; v < n_; ++v) {
                int m = mult(u, v);
                deg += m;
                if (m > 0) mask |= detail::bit(v);
            }
            degree_[u] = deg;
            adj_[u] = mask;
            total_edges_ += deg;
        }
        total_edges_ /= 2;
    }

    bool connected() const {
        std::uint64_t seen = detail::bit(0);
        std::uint64_t frontier = seen;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m != 0; m &= m - 1)
                next |= adj_[std::countr_zero(m)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == detail::full_mask(n_);
    }

    int n_ = 0;
    std::vector<int> mult_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> degree_;
    int total_edges_ = 0;
};

namespace detail {

// Component of `start` inside the induced subgraph on `allowed`.
inline std::uint64_t component_of(const Multigraph& g, std::uint64_t allowed, int start) {
    std::uint64_t seen = bit(start) & allowed;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m != 0; m &= m - 1)
            next |= g.adjacency_mask(std::countr_zero(m));
        next &= allowed;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline std::uint64_t neighborhood_of(const Multigraph& g, std::uint64_t set) {
    std::uint64_t nb = 0;
    for (std::uint64_t m = set; m != 0; m &= m - 1) nb |= g.adjacency_mask(std::countr_zero(m));
    return nb & ~set;
}

} // namespace detail

inline void check_set(const Multigraph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.vertex_count())
        fail(errc::graph_mismatch, std::string(what) + " belongs to a different graph");
}

// Number of edges (with multiplicity) between A and its complement.
inline int edge_cut(const Multigraph& g, const VertexSet& a) {
    check_set(g, a, "cut side");
    if (a.empty() || a.is_all()) fail(errc::empty_side, "cut side must be proper and nonempty");
    int cut = 0;
    for (int u : a.to_vector())
        for (int v : a.complement().to_vector()) cut += g.mult(u, v);
    return cut;
}

inline bool is_connected_subset(const Multigraph& g, const VertexSet& b) {
    check_set(g, b, "subset");
    if (b.empty()) fail(errc::empty_set, "connectivity of the empty set is undefined");
    return detail::component_of(g, b.mask(), b.first()) == b.mask();
}

struct CutResult {
    int value = 0;
    VertexSet side; // contains all of S, none of T
};

namespace detail {

// Edmonds-Karp on a dense residual matrix. Multiplicities act as integer
// capacities in both directions; terminals are wired to an artificial
// source/sink with effectively infinite capacity.
inline CutResult min_cut_impl(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    const int n = g.vertex_count();
    const int src = n, dst = n + 1, total = n + 2;
    const int inf = g.total_edge_count() + 1;

    std::vector<std::vector<int>> cap(total, std::vector<int>(total, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) cap[u][v] = g.mult(u, v);
    for (int u : s.to_vector()) cap[src][u] = inf;
    for (int v : t.to_vector()) cap[v][dst] = inf;

    std::vector<int> parent(total);
    auto bfs = [&]() -> bool {
        std::fill(parent.begin(), parent.end(), -1);
        parent[src] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < total; ++v) {
                if (parent[v] == -1 && cap[u][v] > 0) {
                    parent[v] = u;
                    if (v == dst) return true;
                    q.push(v);
                }
            }
        }
        return false;
    };

    int flow = 0;
    while (bfs()) {
        int bottleneck = inf;
        for (int v = dst; v != src; v = parent[v])
            bottleneck = std::min(bottleneck, cap[parent[v]][v]);
        for (int v = dst; v != src; v = parent[v]) {
            cap[parent[v]][v] -= bottleneck;
            cap[v][parent[v]] += bottleneck;
        }
        flow += bottleneck;
    }

    // Source side of the cut = vertices reachable in the residual graph.
    std::fill(parent.begin(), parent.end(), -1);
    parent[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < total; ++v) {
            if (parent[v] == -1 && cap[u][v] > 0) {
                parent[v] = u;
                q.push(v);
            }
        }
    }
    VertexSet side = VertexSet::empty_of(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] != -1) side = side.with(v);
    return {flow, side};
}

} // namespace detail

// Minimum number of edges whose removal separates S from T; equals the
// maximum number of edge-disjoint S-T paths. The returned side realizes the
// minimum, with S inside and T outside.
inline CutResult min_cut_between(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    check_set(g, s, "source terminals");
    check_set(g, t, "sink terminals");
    if (s.empty() || t.empty()) fail(errc::empty_set, "terminal sets must be nonempty");
    if (s.intersects(t)) fail(errc::terminals_overlap, "terminal sets must be disjoint");
    return detail::min_cut_impl(g, s, t);
}

struct ContractResult {
    Multigraph graph;
    // vertex_map[old_id] = new_id; both endpoints of the contracted edge map
    // to the merged vertex.
    std::vector<int> vertex_map;
};

// Merge the endpoints of an edge. Parallel copies of the contracted edge
// vanish (no loops); multiplicities toward common neighbors accumulate.
// Vertex ids are renumbered densely: the merged vertex takes min(u,v)'s slot
// and ids above max(u,v) shift down by one.
inline ContractResult contract_edge(const Multigraph& g, int u, int v) {
    if (!g.has_edge(u, v)) fail(errc::not_an_edge, "contract_edge requires an existing edge");
    const int n = g.vertex_count();
    const int keep = std::min(u, v), drop = std::max(u, v);
    std::vector<int> map(n);
    for (int w = 0; w < n; ++w) map[w] = (w == drop) ? keep : (w > drop ? w - 1 : w);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = map[e.u], b = map[e.v];
        if (a == b) continue; // the contracted bundle itself
        edges.push_back({std::min(a, b), std::max(a, b), e.mult});
    }
    return {Multigraph::build(n - 1, edges), std::move(map)};
}

// Replace one parallel copy of (u,v) by a path u - w - v through a fresh
// vertex w with id n.
inline Multigraph subdivide_edge(const Multigraph& g, int u, int v) {
    if (!g.has_edge(u, v)) fail(errc::not_an_edge, "subdivide_edge requires an existing edge");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if ((e.u == std::min(u, v)) && (e.v == std::max(u, v))) {
            if (e.mult > 1) edges.push_back({e.u, e.v, e.mult - 1});
        } else {
            edges.push_back(e);
        }
    }
    edges.push_back({std::min(u, n), std::max(u, n), 1});
    edges.push_back({std::min(v, n), std::max(v, n), 1});
    return Multigraph::build(n + 1, edges);
}

// Scale every multiplicity by t.
inline Multigraph ply(const Multigraph& g, int t) {
    if (t < 1) fail(errc::zero_factor, "ply factor must be at least 1");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.mult *= t;
    return Multigraph::build(g.vertex_count(), edges);
}

// Clamp every positive multiplicity to 1.
inline Multigraph underlying_simple(const Multigraph& g) {
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.mult = 1;
    return Multigraph::build(g.vertex_count(), edges);
}

// Cartesian product with column/row addressing. Vertex (a,b) of
// G1 [] G2 receives id a*|V(G2)| + b; a column fixes the G1 coordinate,
// a row fixes the G2 coordinate.
struct Product {
    Multigraph graph;
    int factor1; // |V(G1)|, number of columns
    int factor2; // |V(G2)|, number of rows = column size

    int vertex(int a, int b) const { return a * factor2 + b; }

    VertexSet column(int a) const {
        if (a < 0 || a >= factor1) fail(errc::bad_param, "column index out of range");
        VertexSet s = VertexSet::empty_of(graph.vertex_count());
        for (int b = 0; b < factor2; ++b) s = s.with(vertex(a, b));
        return s;
    }

    VertexSet row(int b) const {
        if (b < 0 || b >= factor2) fail(errc::bad_param, "row index out of range");
        VertexSet s = VertexSet::empty_of(graph.vertex_count());
        for (int a = 0; a < factor1; ++a) s = s.with(vertex(a, b));
        return s;
    }
};

inline Product cartesian_product(const Multigraph& g1, const Multigraph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 * n2 > Multigraph::max_vertices)
        fail(errc::too_large, "product exceeds the 64-vertex engine limit");
    std::vector<Edge> edges;
    auto id = [n2](int a, int b) { return a * n2 + b; };
    for (int a = 0; a < n1; ++a)
        for (const Edge& e : g2.edges()) edges.push_back({id(a, e.u), id(a, e.v), e.mult});
    for (int b = 0; b < n2; ++b)
        for (const Edge& e : g1.edges()) edges.push_back({id(e.u, b), id(e.v, b), e.mult});
    return {Multigraph::build(n1 * n2, edges), n1, n2};
}

} // namespace scramblekit
