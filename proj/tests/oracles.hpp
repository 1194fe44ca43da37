// Brute-force reference implementations used only by tests. Everything here
// follows the defining quantifiers directly (subset enumeration, integer
// linear algebra) and stays independent of the library's algorithmic paths.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "scramblekit/divisor.hpp"
#include "scramblekit/multigraph.hpp"
#include "scramblekit/scramble.hpp"

namespace oracles {

using scramblekit::Divisor;
using scramblekit::Edge;
using scramblekit::Multigraph;
using scramblekit::Scramble;
using scramblekit::VertexSet;

inline int edge_cut_mask(const Multigraph& g, std::uint64_t a) {
    int cut = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((a >> u & 1) && !(a >> v & 1)) cut += g.mult(u, v);
    return cut;
}

// min over all sides A with S inside and T outside
inline int min_cut_between(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    const int n = g.vertex_count();
    const std::uint64_t full = scramblekit::detail::full_mask(n);
    int best = -1;
    for (std::uint64_t a = 1; a < full; ++a) {
        if ((s.mask() & ~a) != 0) continue;
        if ((t.mask() & a) != 0) continue;
        int cut = edge_cut_mask(g, a);
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

inline int hitting_number(const Multigraph& g, const Scramble& s) {
    const int n = g.vertex_count();
    const std::uint64_t full = scramblekit::detail::full_mask(n);
    int best = n;
    for (std::uint64_t c = 0; c <= full; ++c) {
        bool hits = true;
        for (const VertexSet& e : s.eggs())
            if ((e.mask() & c) == 0) {
                hits = false;
                break;
            }
        if (hits) best = std::min(best, std::popcount(c));
    }
    return best;
}

// min edge cut over all sides containing one egg and excluding another;
// empty when no side qualifies
inline std::optional<int> cut_number(const Multigraph& g, const Scramble& s) {
    const int n = g.vertex_count();
    const std::uint64_t full = scramblekit::detail::full_mask(n);
    std::optional<int> best;
    for (std::uint64_t a = 1; a < full; ++a) {
        bool inside = false, outside = false;
        for (const VertexSet& e : s.eggs()) {
            if ((e.mask() & ~a) == 0) inside = true;
            if ((e.mask() & a) == 0) outside = true;
        }
        if (!inside || !outside) continue;
        int cut = edge_cut_mask(g, a);
        if (!best || cut < *best) best = cut;
    }
    return best;
}

inline int scramble_order(const Multigraph& g, const Scramble& s) {
    auto c = oracles::cut_number(g, s);
    int h = oracles::hitting_number(g, s);
    return c ? std::min(h, *c) : h;
}

// The definition's two conditions at level k.
inline bool order_conditions_hold(const Multigraph& g, const Scramble& s, int k) {
    if (oracles::hitting_number(g, s) < k) return false;
    auto c = oracles::cut_number(g, s);
    return !c || *c >= k;
}

// Definitional reducedness: no nonempty subset avoiding v fires effectively.
inline bool is_reduced(const Multigraph& g, const Divisor& d, int v) {
    const int n = g.vertex_count();
    const std::uint64_t full = scramblekit::detail::full_mask(n);
    for (std::uint64_t a = 1; a <= full; ++a) {
        if (a >> v & 1) continue;
        if (scramblekit::detail::fire_set_unchecked(g, d, a).effective()) return false;
    }
    return true;
}

namespace detail {

// Solves Q x = b exactly over the rationals by Cramer's rule with
// fraction-free determinants; reports whether the solution is integral.
inline __int128 det(std::vector<std::vector<long long>> m) {
    const size_t k = m.size();
    // Bareiss fraction-free elimination
    __int128 sign = 1;
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    for (size_t p = 0; p + 1 < k; ++p) {
        if (a[p][p] == 0) {
            size_t swap_row = p + 1;
            while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == k) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < k; ++i)
            for (size_t j = p + 1; j < k; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

} // namespace detail

// Divisor equivalence decided on the firing lattice: d1 ~ d2 iff
// d1 - d2 = L x has an integer solution, checked on the reduced Laplacian.
inline bool equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    if (d1.degree() != d2.degree()) return false;
    const int n = g.vertex_count();
    if (n == 1) return true;
    const size_t k = static_cast<size_t>(n) - 1;
    std::vector<std::vector<long long>> q(k, std::vector<long long>(k));
    std::vector<long long> b(k);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j)
            q[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] =
                (i == j) ? g.degree(i) : -g.mult(i, j);
        b[static_cast<size_t>(i) - 1] = d1[i] - d2[i];
    }
    __int128 det_q = detail::det(q);
    if (det_q == 0) return false; // cannot happen on a connected graph
    for (size_t col = 0; col < k; ++col) {
        auto qi = q;
        for (size_t row = 0; row < k; ++row) qi[row][col] = b[row];
        __int128 det_i = detail::det(qi);
        if (det_i % det_q != 0) return false;
    }
    return true;
}

// Exhaustive gonality without the reduced-divisor restriction: scan every
// effective divisor of each degree.
inline int gonality_unrestricted(const Multigraph& g) {
    const int n = g.vertex_count();
    for (int deg = 1; deg <= n; ++deg) {
        Divisor d(n);
        auto rec = [&](auto&& self, int v, int rem) -> bool {
            if (v == n) return rem == 0 && scramblekit::has_positive_rank(g, d);
            for (int c = rem; c >= 0; --c) {
                d[v] = c;
                if (self(self, v + 1, rem - c)) return true;
            }
            d[v] = 0;
            return false;
        };
        if (rec(rec, 0, deg)) return deg;
    }
    return n;
}

// Unrestricted scramble-number search: every nonempty subset of the
// connected sets is a scramble (no antichain reduction), ordered by the
// brute-force hitting and cut oracles above.
inline int sn_unrestricted(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> sets;
    for (std::uint64_t m = 1; m <= scramblekit::detail::full_mask(n); ++m)
        if (scramblekit::detail::component_of(g, m, std::countr_zero(m)) == m) sets.push_back(m);
    int best = 0;
    const std::uint64_t families = std::uint64_t{1} << sets.size();
    for (std::uint64_t f = 1; f < families; ++f) {
        std::vector<VertexSet> eggs;
        for (size_t i = 0; i < sets.size(); ++i)
            if (f >> i & 1) eggs.push_back(VertexSet::from_mask(n, sets[i]));
        best = std::max(best, oracles::scramble_order(g, Scramble(g, std::move(eggs))));
    }
    return best;
}

// --- exhaustive corpora -------------------------------------------------------

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

inline std::vector<Multigraph> all_connected_multigraphs(int n, int max_mult) {
    std::vector<Multigraph> out;
    auto pairs = vertex_pairs(n);
    std::vector<int> mults(pairs.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == pairs.size()) {
            std::vector<Edge> edges;
            for (size_t p = 0; p < pairs.size(); ++p)
                if (mults[p] > 0) edges.push_back({pairs[p].first, pairs[p].second, mults[p]});
            try {
                out.push_back(Multigraph::build(n, edges));
            } catch (const scramblekit::error&) {
            }
            return;
        }
        for (int m = 0; m <= max_mult; ++m) {
            mults[i] = m;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Multigraph> all_connected_simple_graphs(int n) {
    return all_connected_multigraphs(n, 1);
}

inline std::vector<Divisor> effective_divisors_up_to(int n, int max_degree) {
    std::vector<Divisor> out;
    Divisor d(n);
    auto rec = [&](auto&& self, int v, int rem) -> void {
        if (v == n) {
            out.push_back(d);
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            d[v] = c;
            self(self, v + 1, rem - c);
        }
        d[v] = 0;
    };
    rec(rec, 0, max_degree);
    return out;
}

// --- seeded random objects -----------------------------------------------------

inline VertexSet random_connected_set(const Multigraph& g, std::mt19937_64& rng, int max_size) {
    const int n = g.vertex_count();
    int start = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::uint64_t set = scramblekit::detail::bit(start);
    int target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    while (std::popcount(set) < target) {
        std::uint64_t fringe = scramblekit::detail::neighborhood_of(g, set);
        if (fringe == 0) break;
        auto options = VertexSet::from_mask(n, fringe).to_vector();
        set |= scramblekit::detail::bit(options[rng() % options.size()]);
    }
    return VertexSet::from_mask(n, set);
}

inline Scramble random_scramble(const Multigraph& g, std::mt19937_64& rng, int eggs, int max_size) {
    std::vector<VertexSet> sets;
    for (int i = 0; i < eggs; ++i) sets.push_back(random_connected_set(g, rng, max_size));
    return Scramble(g, std::move(sets));
}

// Pairwise constraints built incrementally with rejection.
inline std::optional<Scramble> random_bramble(const Multigraph& g, std::mt19937_64& rng, int eggs,
                                              bool strict) {
    std::vector<VertexSet> sets;
    for (int attempts = 0; static_cast<int>(sets.size()) < eggs && attempts < 300; ++attempts) {
        VertexSet cand = random_connected_set(g, rng, std::max(2, g.vertex_count() / 2));
        bool ok = true;
        for (const VertexSet& e : sets) {
            if (strict ? !e.intersects(cand) : !scramblekit::is_connected_subset(g, e | cand)) {
                ok = false;
                break;
            }
        }
        if (ok) sets.push_back(cand);
    }
    if (sets.empty()) return std::nullopt;
    return Scramble(g, std::move(sets));
}

} // namespace oracles
