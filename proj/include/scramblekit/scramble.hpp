#pragma once

#include <algorithm>
#include <climits>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scramblekit/families.hpp"
#include "scramblekit/multigraph.hpp"

namespace scramblekit {

// Nonempty family of nonempty connected vertex sets ("eggs") on a fixed
// graph. Eggs are deduplicated and kept sorted by mask, so equal scrambles
// compare equal and every downstream computation is deterministic.
class Scramble {
public:
    Scramble(const Multigraph& g, std::vector<VertexSet> eggs) : n_(g.vertex_count()) {
        if (eggs.empty()) fail(errc::empty_set, "a scramble needs at least one egg");
        for (const VertexSet& e : eggs) {
            check_set(g, e, "egg");
            if (e.empty()) fail(errc::empty_set, "eggs must be nonempty");
            if (!is_connected_subset(g, e)) fail(errc::disconnected_egg, "eggs must be connected");
        }
        std::sort(eggs.begin(), eggs.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.mask() < b.mask(); });
        eggs.erase(std::unique(eggs.begin(), eggs.end()), eggs.end());
        eggs_ = std::move(eggs);
    }

    int universe() const { return n_; }
    const std::vector<VertexSet>& eggs() const { return eggs_; }
    int size() const { return static_cast<int>(eggs_.size()); }

    bool operator==(const Scramble& o) const { return n_ == o.n_ && eggs_ == o.eggs_; }

private:
    int n_ = 0;
    std::vector<VertexSet> eggs_;
};

inline void check_scramble(const Multigraph& g, const Scramble& s) {
    if (s.universe() != g.vertex_count())
        fail(errc::graph_mismatch, "scramble belongs to a different graph");
}

namespace detail {

// Exact minimum hitting set by branch and bound: branch on an uncovered egg
// of minimum size, lower-bound with a greedy packing of pairwise-disjoint
// uncovered eggs, tie-break everything by vertex id. If the true minimum
// exceeds `cap`, returns {cap + 1, 0} instead of continuing the search.
struct HittingSolver {
    const std::vector<std::uint64_t>& eggs;
    int best = 0;
    std::uint64_t best_set = 0;
    bool have_witness = false;

    explicit HittingSolver(const std::vector<std::uint64_t>& e) : eggs(e) {}

    static int greedy_lower_bound(const std::vector<std::uint64_t>& uncovered) {
        std::uint64_t taken = 0;
        int count = 0;
        for (std::uint64_t e : uncovered)
            if ((e & taken) == 0) {
                taken |= e;
                ++count;
            }
        return count;
    }

    void recurse(std::uint64_t chosen, int chosen_count, const std::vector<std::uint64_t>& uncovered) {
        if (chosen_count + greedy_lower_bound(uncovered) >= best) return;
        if (uncovered.empty()) {
            best = chosen_count;
            best_set = chosen;
            have_witness = true;
            return;
        }
        std::uint64_t branch_egg = uncovered.front();
        for (std::uint64_t e : uncovered)
            if (std::popcount(e) < std::popcount(branch_egg)) branch_egg = e;
        for (std::uint64_t m = branch_egg; m != 0; m &= m - 1) {
            std::uint64_t v = m & (~m + 1);
            std::vector<std::uint64_t> next;
            next.reserve(uncovered.size());
            for (std::uint64_t e : uncovered)
                if ((e & v) == 0) next.push_back(e);
            recurse(chosen | v, chosen_count + 1, next);
        }
    }

    std::pair<int, std::uint64_t> solve(int cap) {
        // greedy cover seeds the upper bound (and a valid witness)
        std::vector<std::uint64_t> uncovered = eggs;
        std::uint64_t greedy_set = 0;
        while (!uncovered.empty()) {
            std::uint64_t all = 0;
            for (std::uint64_t e : uncovered) all |= e;
            std::uint64_t pick = 0;
            int pick_score = -1;
            for (std::uint64_t m = all; m != 0; m &= m - 1) {
                std::uint64_t v = m & (~m + 1);
                int score = 0;
                for (std::uint64_t e : uncovered)
                    if (e & v) ++score;
                if (score > pick_score) {
                    pick_score = score;
                    pick = v;
                }
            }
            greedy_set |= pick;
            std::vector<std::uint64_t> next;
            for (std::uint64_t e : uncovered)
                if ((e & pick) == 0) next.push_back(e);
            uncovered = std::move(next);
        }
        best = std::popcount(greedy_set);
        best_set = greedy_set;
        have_witness = true;
        if (best > cap + 1) {
            best = cap + 1;
            have_witness = false;
        }
        recurse(0, 0, eggs);
        return {best, have_witness ? best_set : 0};
    }
};

inline std::pair<int, std::uint64_t> min_hitting_set(const std::vector<std::uint64_t>& eggs, int cap) {
    HittingSolver solver(eggs);
    return solver.solve(cap);
}

} // namespace detail

struct HittingResult {
    int count = 0;
    VertexSet witness;
};

inline HittingResult hitting_number(const Multigraph& g, const Scramble& s) {
    check_scramble(g, s);
    std::vector<std::uint64_t> eggs;
    eggs.reserve(static_cast<size_t>(s.size()));
    for (const VertexSet& e : s.eggs()) eggs.push_back(e.mask());
    auto [count, witness] = detail::min_hitting_set(eggs, g.vertex_count());
    return {count, VertexSet::from_mask(g.vertex_count(), witness)};
}

struct CutPairWitness {
    int egg_a = 0; // index into Scramble::eggs(), contained in `side`
    int egg_b = 0; // contained in the complement of `side`
    VertexSet side;
};

struct CutNumberResult {
    std::optional<int> value; // empty = no two eggs are disjoint (infinite)
    std::optional<CutPairWitness> witness;
};

// Minimum edge cut over sets containing one egg and excluding another,
// computed as the minimum s-t cut over disjoint egg pairs. Pairs that
// overlap admit no separating set and are skipped; if no pair is disjoint
// the separation condition holds vacuously and the value is infinite.
inline CutNumberResult cut_number(const Multigraph& g, const Scramble& s) {
    check_scramble(g, s);
    CutNumberResult r;
    const auto& eggs = s.eggs();
    for (int i = 0; i < s.size(); ++i) {
        for (int j = i + 1; j < s.size(); ++j) {
            if (eggs[static_cast<size_t>(i)].intersects(eggs[static_cast<size_t>(j)])) continue;
            CutResult cut = min_cut_between(g, eggs[static_cast<size_t>(i)], eggs[static_cast<size_t>(j)]);
            if (!r.value || cut.value < *r.value) {
                r.value = cut.value;
                r.witness = CutPairWitness{i, j, cut.side};
            }
        }
    }
    return r;
}

struct OrderCertificate {
    int order = 0;
    int hitting_number = 0;
    VertexSet hitting_set;
    std::optional<int> cut_number; // empty = infinite
    std::optional<CutPairWitness> cut_witness;
};

inline OrderCertificate scramble_order(const Multigraph& g, const Scramble& s) {
    HittingResult h = hitting_number(g, s);
    CutNumberResult c = cut_number(g, s);
    OrderCertificate cert;
    cert.hitting_number = h.count;
    cert.hitting_set = h.witness;
    cert.cut_number = c.value;
    cert.cut_witness = c.witness;
    cert.order = c.value ? std::min(h.count, *c.value) : h.count;
    return cert;
}

// Re-checks everything a certificate asserts: the hitting set hits every egg
// at the claimed size, the cut side separates its egg pair at the claimed
// value, and the order is the min of the two.
inline bool verify_certificate(const Multigraph& g, const Scramble& s, const OrderCertificate& cert) {
    if (cert.hitting_set.count() != cert.hitting_number) return false;
    for (const VertexSet& e : s.eggs())
        if (!e.intersects(cert.hitting_set)) return false;
    if (cert.cut_number.has_value() != cert.cut_witness.has_value()) return false;
    if (cert.cut_witness) {
        const CutPairWitness& w = *cert.cut_witness;
        if (w.egg_a < 0 || w.egg_a >= s.size() || w.egg_b < 0 || w.egg_b >= s.size()) return false;
        const VertexSet& a = s.eggs()[static_cast<size_t>(w.egg_a)];
        const VertexSet& b = s.eggs()[static_cast<size_t>(w.egg_b)];
        if (!a.subset_of(w.side)) return false;
        if (b.intersects(w.side)) return false;
        if (edge_cut(g, w.side) != *cert.cut_number) return false;
    }
    int expected = cert.cut_number ? std::min(cert.hitting_number, *cert.cut_number)
                                   : cert.hitting_number;
    return cert.order == expected;
}

// --- named constructions -----------------------------------------------------

inline Scramble singleton_scramble(const Multigraph& g) {
    std::vector<VertexSet> eggs;
    for (int v = 0; v < g.vertex_count(); ++v)
        eggs.push_back(VertexSet::empty_of(g.vertex_count()).with(v));
    return Scramble(g, std::move(eggs));
}

inline Scramble columns_scramble(const Product& p) {
    std::vector<VertexSet> eggs;
    for (int a = 0; a < p.factor1; ++a) eggs.push_back(p.column(a));
    return Scramble(p.graph, std::move(eggs));
}

// One egg per vertex: its column with that vertex removed.
inline Scramble punctured_columns_scramble(const Product& p) {
    if (p.factor2 < 2) fail(errc::bad_param, "punctured columns need column size >= 2");
    std::vector<VertexSet> eggs;
    for (int a = 0; a < p.factor1; ++a)
        for (int b = 0; b < p.factor2; ++b) eggs.push_back(p.column(a).without(p.vertex(a, b)));
    return Scramble(p.graph, std::move(eggs));
}

// The four-egg scramble on fig2_wheel: three adjacent rim pairs and the hub.
inline Scramble fig2_scramble() {
    Multigraph wheel = fig2_wheel();
    return Scramble(wheel, {
        VertexSet::of(7, {0, 3}),
        VertexSet::of(7, {1, 4}),
        VertexSet::of(7, {5, 6}),
        VertexSet::of(7, {2}),
    });
}

// --- transports ----------------------------------------------------------------

// Reinterpret the eggs of a scramble on a subgraph inside a host graph, via
// an explicit injection of vertex ids. The injection must map edges onto
// edges with at least the same multiplicity.
inline Scramble subgraph_transport(const Multigraph& sub, const Scramble& s,
                                   const Multigraph& host, const std::vector<int>& injection) {
    check_scramble(sub, s);
    if (static_cast<int>(injection.size()) != sub.vertex_count())
        fail(errc::not_a_subgraph, "injection has the wrong length");
    std::uint64_t hit = 0;
    for (int img : injection) {
        if (img < 0 || img >= host.vertex_count() || (hit & detail::bit(img)))
            fail(errc::not_a_subgraph, "vertex map is not an injection into the host graph");
        hit |= detail::bit(img);
    }
    for (const Edge& e : sub.edges())
        if (host.mult(injection[static_cast<size_t>(e.u)], injection[static_cast<size_t>(e.v)]) < e.mult)
            fail(errc::not_a_subgraph, "host graph is missing edges of the subgraph");

    std::vector<VertexSet> eggs;
    for (const VertexSet& e : s.eggs()) {
        VertexSet img = VertexSet::empty_of(host.vertex_count());
        for (int v : e.to_vector()) img = img.with(injection[static_cast<size_t>(v)]);
        eggs.push_back(img);
    }
    return Scramble(host, std::move(eggs));
}

// Carry a scramble across one edge subdivision: the new midpoint u joins
// exactly the eggs that contain the distinguished endpoint v.
inline Scramble subdivision_transport(const Multigraph& base, const Scramble& s,
                                      const Multigraph& subdivided, int v, int w) {
    check_scramble(base, s);
    if (subdivided.vertex_count() != base.vertex_count() + 1 ||
        !base.has_edge(v, w) ||
        subdivided != subdivide_edge(base, v, w))
        fail(errc::not_a_subdivision, "graph is not the subdivision of the given edge");
    const int u = base.vertex_count(); // the midpoint's id
    std::vector<VertexSet> eggs;
    for (const VertexSet& e : s.eggs()) {
        VertexSet img = VertexSet::from_mask(subdivided.vertex_count(), e.mask());
        if (e.contains(v)) img = img.with(u);
        eggs.push_back(img);
    }
    return Scramble(subdivided, std::move(eggs));
}

// --- bramble predicates ---------------------------------------------------------

inline bool is_bramble(const Multigraph& g, const Scramble& s) {
    check_scramble(g, s);
    const auto& eggs = s.eggs();
    for (size_t i = 0; i < eggs.size(); ++i)
        for (size_t j = i + 1; j < eggs.size(); ++j)
            if (!is_connected_subset(g, eggs[i] | eggs[j])) return false;
    return true;
}

inline bool is_strict_bramble(const Multigraph& g, const Scramble& s) {
    check_scramble(g, s);
    const auto& eggs = s.eggs();
    for (size_t i = 0; i < eggs.size(); ++i)
        for (size_t j = i + 1; j < eggs.size(); ++j)
            if (!eggs[i].intersects(eggs[j])) return false;
    return true;
}

// --- scramble number search -----------------------------------------------------

struct SnSearchResult {
    int value = 0;
    Scramble best;
    bool exhaustive = false;
};

struct SnLowerOptions {
    const Product* product = nullptr; // enables column-based constructions
    bool singletons = true;
    bool columns = true;
    bool punctured_columns = true;
    bool figure_scrambles = true;
    bool local_search = true;
};

namespace detail {

struct ScoredScramble {
    Scramble scramble;
    OrderCertificate cert;
};

// Singleton families from edge-connectivity classes. Pairwise min-cut obeys
// lambda(u,w) >= min(lambda(u,v), lambda(v,w)), so "lambda >= k" is an
// equivalence relation; each class of size >= 2, taken as singleton eggs,
// has cut number >= k and order min(|class|, cut). These seeds rescue graphs
// with pendants or bridges, where the all-singletons scramble bottoms out.
inline std::vector<std::vector<VertexSet>> connectivity_class_families(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> cut(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    int max_cut = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = min_cut_impl(g, VertexSet::empty_of(n).with(u), VertexSet::empty_of(n).with(v)).value;
            cut[static_cast<size_t>(u)][static_cast<size_t>(v)] = c;
            cut[static_cast<size_t>(v)][static_cast<size_t>(u)] = c;
            max_cut = std::max(max_cut, c);
        }

    std::vector<std::vector<VertexSet>> families;
    std::vector<std::vector<int>> seen_classes;
    for (int k = 2; k <= max_cut; ++k) {
        std::vector<int> cls(static_cast<size_t>(n), -1);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (cls[static_cast<size_t>(v)] >= 0) continue;
            cls[static_cast<size_t>(v)] = next;
            for (int w = v + 1; w < n; ++w)
                if (cut[static_cast<size_t>(v)][static_cast<size_t>(w)] >= k) cls[static_cast<size_t>(w)] = next;
            ++next;
        }
        for (int c = 0; c < next; ++c) {
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (cls[static_cast<size_t>(v)] == c) members.push_back(v);
            if (members.size() < 2) continue;
            if (std::find(seen_classes.begin(), seen_classes.end(), members) != seen_classes.end())
                continue;
            seen_classes.push_back(members);
            std::vector<VertexSet> eggs;
            for (int v : members) eggs.push_back(VertexSet::empty_of(n).with(v));
            families.push_back(std::move(eggs));
        }
    }
    return families;
}

// Deterministic strict-improvement hill climb. When the cut number binds,
// eggs are grown or merged (raising cuts); when the hitting number binds,
// eggs are shrunk or small new eggs are added (raising the hitting number).
inline ScoredScramble local_search(const Multigraph& g, ScoredScramble cur) {
    const int n = g.vertex_count();
    for (int round = 0; round < 40; ++round) {
        const int cur_order = cur.cert.order;
        const bool cut_binds =
            cur.cert.cut_number && *cur.cert.cut_number <= cur.cert.hitting_number;
        std::vector<std::vector<VertexSet>> candidates;
        const auto& eggs = cur.scramble.eggs();

        auto replace = [&](size_t idx, VertexSet e) {
            std::vector<VertexSet> next;
            for (size_t k = 0; k < eggs.size(); ++k) next.push_back(k == idx ? e : eggs[k]);
            return next;
        };

        if (cut_binds) {
            for (size_t i = 0; i < eggs.size(); ++i) {
                std::uint64_t fringe = neighborhood_of(g, eggs[i].mask());
                for (std::uint64_t m = fringe; m != 0; m &= m - 1)
                    candidates.push_back(replace(i, eggs[i].with(std::countr_zero(m))));
            }
            for (size_t i = 0; i < eggs.size(); ++i)
                for (size_t j = i + 1; j < eggs.size(); ++j) {
                    VertexSet u = eggs[i] | eggs[j];
                    if (!is_connected_subset(g, u)) continue;
                    std::vector<VertexSet> next;
                    for (size_t k = 0; k < eggs.size(); ++k)
                        if (k != i && k != j) next.push_back(eggs[k]);
                    next.push_back(u);
                    candidates.push_back(std::move(next));
                }
        } else {
            for (size_t i = 0; i < eggs.size(); ++i) {
                if (eggs[i].count() < 2) continue;
                for (int v : eggs[i].to_vector()) {
                    VertexSet shrunk = eggs[i].without(v);
                    if (is_connected_subset(g, shrunk)) candidates.push_back(replace(i, shrunk));
                }
            }
            for (int v = 0; v < n; ++v) {
                std::vector<VertexSet> next(eggs.begin(), eggs.end());
                next.push_back(VertexSet::empty_of(n).with(v));
                candidates.push_back(std::move(next));
            }
        }

        bool improved = false;
        for (auto& cand : candidates) {
            Scramble sc(g, cand);
            OrderCertificate cert = scramble_order(g, sc);
            if (cert.order > cur_order) {
                cur = {std::move(sc), std::move(cert)};
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return cur;
}

} // namespace detail

// Best scramble found by the construction portfolio plus a greedy local
// search. The result is a sound lower bound for sn(G) regardless of how far
// the search gets; exhaustive is always false here.
inline SnSearchResult sn_lower_bound(const Multigraph& g, const SnLowerOptions& opts = {}) {
    if (g.vertex_count() < 2) fail(errc::bad_param, "scramble search needs at least two vertices");
    std::vector<detail::ScoredScramble> pool;
    auto consider = [&](Scramble s) {
        OrderCertificate cert = scramble_order(g, s);
        pool.push_back({std::move(s), std::move(cert)});
    };

    if (opts.singletons) {
        consider(singleton_scramble(g));
        for (auto& eggs : detail::connectivity_class_families(g)) consider(Scramble(g, std::move(eggs)));
    }
    if (opts.product && opts.product->graph == g) {
        if (opts.columns) consider(columns_scramble(*opts.product));
        if (opts.punctured_columns && opts.product->factor2 >= 2) {
            try {
                consider(punctured_columns_scramble(*opts.product));
            } catch (const error& e) {
                // punctured columns of a path factor disconnect; skip them
                if (e.code() != errc::disconnected_egg) throw;
            }
        }
    }
    if (opts.figure_scrambles && g.vertex_count() == 7 && g == fig2_wheel())
        consider(fig2_scramble());
    if (pool.empty()) consider(singleton_scramble(g));

    size_t best = 0;
    for (size_t i = 1; i < pool.size(); ++i)
        if (pool[i].cert.order > pool[best].cert.order) best = i;

    detail::ScoredScramble chosen = pool[best];
    if (opts.local_search) chosen = detail::local_search(g, std::move(chosen));
    return {chosen.cert.order, chosen.scramble, false};
}

namespace detail {

// Exhaustive scramble-number search. Scrambles are enumerated as inclusion
// antichains of connected sets, which loses no generality: dropping an egg
// that contains another egg keeps the hitting number (hitting the inner egg
// hits the outer one) and can only raise the cut number (fewer separated
// pairs), so some optimal scramble is an antichain.
struct SnExactSearch {
    const Multigraph& g;
    int n;
    std::vector<std::uint64_t> sets; // connected subsets, ascending mask order
    std::vector<std::vector<int>> cut_memo;
    int best = 0;
    std::vector<std::uint64_t> best_eggs;

    explicit SnExactSearch(const Multigraph& graph)
        : g(graph), n(graph.vertex_count()) {
        for (std::uint64_t m = 1; m <= full_mask(n); ++m)
            if (component_of(g, m, std::countr_zero(m)) == m) sets.push_back(m);
        cut_memo.assign(sets.size(), std::vector<int>(sets.size(), -1));
    }

    int pair_cut(int i, int j) {
        int& memo = cut_memo[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (memo < 0) {
            memo = min_cut_impl(g, VertexSet::from_mask(n, sets[static_cast<size_t>(i)]),
                                VertexSet::from_mask(n, sets[static_cast<size_t>(j)]))
                       .value;
            cut_memo[static_cast<size_t>(j)][static_cast<size_t>(i)] = memo;
        }
        return memo;
    }

    // cur_cut uses INT_MAX for "no disjoint pair yet"; it is only ever
    // compared, the public result converts through min(h, c).
    void dfs(int last, std::vector<int>& chosen, std::vector<std::uint64_t>& masks, int cur_cut) {
        if (!chosen.empty()) {
            int cap = std::min(cur_cut, n);
            auto [h, hs] = min_hitting_set(masks, cap);
            (void)hs;
            int order = std::min(h, cur_cut);
            if (order > best) {
                best = order;
                best_eggs = masks;
            }
        }
        if (cur_cut <= best || best >= n) return;
        for (int j = last + 1; j < static_cast<int>(sets.size()); ++j) {
            std::uint64_t cand = sets[static_cast<size_t>(j)];
            bool comparable = false;
            int cut_here = cur_cut;
            for (int idx : chosen) {
                std::uint64_t e = sets[static_cast<size_t>(idx)];
                if ((e & cand) == e || (e & cand) == cand) {
                    comparable = true;
                    break;
                }
                if ((e & cand) == 0) cut_here = std::min(cut_here, pair_cut(idx, j));
            }
            if (comparable || cut_here <= best) continue;
            chosen.push_back(j);
            masks.push_back(cand);
            dfs(j, chosen, masks, cut_here);
            chosen.pop_back();
            masks.pop_back();
        }
    }
};

} // namespace detail

// Exhaustive scramble number on tiny graphs (the search is doubly
// exponential in the vertex count).
inline SnSearchResult sn_exact(const Multigraph& g, int vertex_cap = 6) {
    const int n = g.vertex_count();
    if (n < 2) fail(errc::bad_param, "scramble search needs at least two vertices");
    if (n > vertex_cap)
        fail(errc::too_large, "graph exceeds the sn_exact vertex cap of " + std::to_string(vertex_cap));
    if (n > 12) fail(errc::too_large, "sn_exact is limited to 12 vertices");

    detail::SnExactSearch search(g);

    // Seed with the singleton scramble so pruning starts with a real bound.
    Scramble singletons = singleton_scramble(g);
    OrderCertificate seed = scramble_order(g, singletons);
    search.best = seed.order;
    for (const VertexSet& e : singletons.eggs()) search.best_eggs.push_back(e.mask());

    if (search.best < n) {
        std::vector<int> chosen;
        std::vector<std::uint64_t> masks;
        search.dfs(-1, chosen, masks, INT_MAX);
    }

    std::vector<VertexSet> eggs;
    for (std::uint64_t m : search.best_eggs) eggs.push_back(VertexSet::from_mask(n, m));
    return {search.best, Scramble(g, std::move(eggs)), true};
}

// --- scramble file format --------------------------------------------------------

inline void write_scramble_text(std::ostream& out, const Scramble& s) {
    for (const VertexSet& e : s.eggs()) {
        out << "egg";
        for (int v : e.to_vector()) out << " " << v;
        out << "\n";
    }
}

inline std::string scramble_to_text(const Scramble& s) {
    std::ostringstream out;
    write_scramble_text(out, s);
    return out.str();
}

inline Scramble read_scramble_text(std::istream& in, const Multigraph& g) {
    auto lines = detail::content_lines(in);
    std::vector<VertexSet> eggs;
    for (const std::string& line : lines) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "egg") fail(errc::parse_error, "expected `egg <v1> <v2> ...` line");
        VertexSet e = VertexSet::empty_of(g.vertex_count());
        int v;
        while (ls >> v) {
            if (v < 0 || v >= g.vertex_count()) fail(errc::parse_error, "egg vertex out of range");
            e = e.with(v);
        }
        eggs.push_back(e);
    }
    return Scramble(g, std::move(eggs));
}

inline Scramble read_scramble_text(const std::string& text, const Multigraph& g) {
    std::istringstream in(text);
    return read_scramble_text(in, g);
}

} // namespace scramblekit
