#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "scramblekit/multigraph.hpp"

namespace scramblekit {

struct TreewidthResult {
    int width = 0;
    std::vector<int> elimination_order;
};

namespace detail {

// q(S \ {v}, v): vertices outside S that are reachable from v through S,
// i.e. the outside neighborhood of v's component in the induced graph on S.
// Per subset we decompose into components once and share the boundary sizes.
struct TwState {
    const Multigraph& g;
    std::vector<std::uint8_t> f;

    explicit TwState(const Multigraph& simple)
        : g(simple), f(std::size_t{1} << simple.vertex_count(), 0) {}

    // Fills q[v] for all v in s; q[v] = |N(component of v in G[s]) \ s|.
    void boundary_sizes(std::uint64_t s, std::vector<int>& q) const {
        std::uint64_t remaining = s;
        while (remaining != 0) {
            int v = std::countr_zero(remaining);
            std::uint64_t comp = component_of(g, s, v);
            int bnd = std::popcount(neighborhood_of(g, comp));
            for (std::uint64_t m = comp; m != 0; m &= m - 1) q[std::countr_zero(m)] = bnd;
            remaining &= ~comp;
        }
    }

    // best vertex to eliminate last within s, and the resulting width
    std::pair<int, int> best_choice(std::uint64_t s, std::vector<int>& q) const {
        boundary_sizes(s, q);
        int best_v = -1, best_w = g.vertex_count() + 1;
        for (std::uint64_t m = s; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            int w = std::max<int>(f[s & ~bit(v)], q[v]);
            if (w < best_w) {
                best_w = w;
                best_v = v;
            }
        }
        return {best_v, best_w};
    }
};

} // namespace detail

// Exact treewidth by dynamic programming over elimination prefixes:
// f(S) = min over v in S of max(f(S \ {v}), q(S \ {v}, v)), with f(V) the
// treewidth and the witness order recovered by backtracking. Parallel edges
// do not affect treewidth, so the DP runs on the underlying simple graph.
inline TreewidthResult treewidth(const Multigraph& g, int vertex_cap = 20) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        fail(errc::too_large, "graph exceeds the treewidth vertex cap of " + std::to_string(vertex_cap));
    if (n > 24) fail(errc::too_large, "subset DP is limited to 24 vertices");
    if (n == 1) return {0, {0}};

    const Multigraph simple = underlying_simple(g);
    detail::TwState st(simple);
    std::vector<int> q(static_cast<size_t>(n), 0);
    const std::uint64_t full = detail::full_mask(n);
    for (std::uint64_t s = 1; s <= full; ++s)
        st.f[s] = static_cast<std::uint8_t>(st.best_choice(s, q).second);

    TreewidthResult result;
    result.width = st.f[full];
    result.elimination_order.assign(static_cast<size_t>(n), -1);
    std::uint64_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = st.best_choice(s, q).first;
        result.elimination_order[static_cast<size_t>(pos)] = v;
        s &= ~detail::bit(v);
    }
    return result;
}

// Width of a specific elimination order, simulated with fill-in: eliminating
// a vertex connects its surviving neighbors pairwise; the width is the
// largest surviving neighborhood seen.
inline int width_of_order(const Multigraph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) fail(errc::not_a_permutation, "order has wrong length");
    std::uint64_t seen = 0;
    for (int v : order) {
        if (v < 0 || v >= n || (seen & detail::bit(v)))
            fail(errc::not_a_permutation, "order is not a permutation of the vertices");
        seen |= detail::bit(v);
    }

    std::vector<std::uint64_t> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.adjacency_mask(v);
    std::uint64_t alive = detail::full_mask(n);
    int width = 0;
    for (int v : order) {
        std::uint64_t nb = adj[static_cast<size_t>(v)] & alive & ~detail::bit(v);
        width = std::max(width, std::popcount(nb));
        for (std::uint64_t m = nb; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            adj[static_cast<size_t>(u)] |= nb & ~detail::bit(u);
        }
        alive &= ~detail::bit(v);
    }
    return width;
}

} // namespace scramblekit
