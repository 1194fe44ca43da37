#pragma once

#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scramblekit/io.hpp"
#include "scramblekit/multigraph.hpp"

namespace scramblekit {

// Integer chip assignment on the vertices of a graph. Entries may go
// negative in intermediate states; only the reduction / rank entry points
// insist on effectiveness.
struct Divisor {
    std::vector<int> chips;

    Divisor() = default;
    explicit Divisor(int n) : chips(static_cast<size_t>(n), 0) {}

    static Divisor at(int n, int v, int amount) {
        Divisor d(n);
        d.chips[static_cast<size_t>(v)] = amount;
        return d;
    }

    static Divisor ones(int n) {
        Divisor d(n);
        for (int& c : d.chips) c = 1;
        return d;
    }

    int size() const { return static_cast<int>(chips.size()); }

    int degree() const { return std::accumulate(chips.begin(), chips.end(), 0); }

    bool effective() const {
        for (int c : chips)
            if (c < 0) return false;
        return true;
    }

    VertexSet support() const {
        VertexSet s = VertexSet::empty_of(size());
        for (int v = 0; v < size(); ++v)
            if (chips[static_cast<size_t>(v)] > 0) s = s.with(v);
        return s;
    }

    int operator[](int v) const { return chips[static_cast<size_t>(v)]; }
    int& operator[](int v) { return chips[static_cast<size_t>(v)]; }

    bool operator==(const Divisor& o) const { return chips == o.chips; }
    bool operator!=(const Divisor& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "(";
        for (int v = 0; v < size(); ++v) {
            if (v) s += ",";
            s += std::to_string(chips[static_cast<size_t>(v)]);
        }
        return s + ")";
    }
};

inline void check_divisor(const Multigraph& g, const Divisor& d, const char* what) {
    if (d.size() != g.vertex_count())
        fail(errc::graph_mismatch, std::string(what) + " has the wrong number of vertices");
}

// Ordered list of set firings; replaying it on the source divisor yields the
// target divisor.
struct FiringScript {
    std::vector<VertexSet> fired;
};

namespace detail {

inline Divisor fire_set_unchecked(const Multigraph& g, Divisor d, std::uint64_t a) {
    const int n = g.vertex_count();
    const std::uint64_t outside = full_mask(n) & ~a;
    for (std::uint64_t m = a; m != 0; m &= m - 1) {
        int u = std::countr_zero(m);
        for (std::uint64_t o = outside & g.adjacency_mask(u); o != 0; o &= o - 1) {
            int v = std::countr_zero(o);
            int k = g.mult(u, v);
            d[u] -= k;
            d[v] += k;
        }
    }
    return d;
}

// One Dhar burning pass: the fire starts at v; a vertex burns once the number
// of burnt edges incident to it (with multiplicity) exceeds its chip count.
// Returns the burnt set. The divisor is v-reduced iff everything burns.
inline std::uint64_t dhar_burnt(const Multigraph& g, const Divisor& d, int v) {
    const int n = g.vertex_count();
    std::vector<int> burnt_edges(static_cast<size_t>(n), 0);
    std::uint64_t burnt = bit(v);
    std::vector<int> queue{v};
    while (!queue.empty()) {
        int w = queue.back();
        queue.pop_back();
        for (std::uint64_t m = g.adjacency_mask(w) & ~burnt; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            burnt_edges[static_cast<size_t>(u)] += g.mult(u, w);
            if (burnt_edges[static_cast<size_t>(u)] > d[u]) {
                burnt |= bit(u);
                queue.push_back(u);
            }
        }
    }
    return burnt;
}

} // namespace detail

// Fire every vertex of A at once: each edge leaving A carries one chip per
// multiplicity from its A-endpoint to its outside endpoint.
inline Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& a) {
    check_divisor(g, d, "divisor");
    check_set(g, a, "firing set");
    if (a.empty() || a.is_all())
        fail(errc::bad_set, "firing set must be a proper nonempty subset");
    return detail::fire_set_unchecked(g, d, a.mask());
}

inline Divisor apply_script(const Multigraph& g, Divisor d, const FiringScript& script) {
    for (const VertexSet& a : script.fired) d = fire_set(g, d, a);
    return d;
}

inline bool is_reduced(const Multigraph& g, const Divisor& d, int v) {
    check_divisor(g, d, "divisor");
    if (!d.effective()) fail(errc::not_effective, "reduction is defined for effective divisors");
    if (v < 0 || v >= g.vertex_count()) fail(errc::bad_param, "vertex id out of range");
    return detail::dhar_burnt(g, d, v) == detail::full_mask(g.vertex_count());
}

struct ReduceResult {
    Divisor divisor;
    FiringScript script;
};

// Iterated burning: while some set survives the fire started at v, fire the
// whole unburnt set and retry. Every fired set avoids v, every intermediate
// divisor stays effective (a surviving vertex has at least as many chips as
// edges toward the burnt region), and the fixpoint is the unique v-reduced
// representative.
inline ReduceResult reduce(const Multigraph& g, const Divisor& d, int v) {
    check_divisor(g, d, "divisor");
    if (!d.effective()) fail(errc::not_effective, "reduction is defined for effective divisors");
    if (v < 0 || v >= g.vertex_count()) fail(errc::bad_param, "vertex id out of range");
    const int n = g.vertex_count();
    ReduceResult r{d, {}};
    for (;;) {
        std::uint64_t burnt = detail::dhar_burnt(g, r.divisor, v);
        std::uint64_t unburnt = detail::full_mask(n) & ~burnt;
        if (unburnt == 0) return r;
        r.divisor = detail::fire_set_unchecked(g, r.divisor, unburnt);
        r.script.fired.push_back(VertexSet::from_mask(n, unburnt));
    }
}

// Positive rank: the v-reduced representative keeps a chip on v, for every v.
// Reduction toward v never removes chips from v, so vertices already in the
// support can be skipped.
inline bool has_positive_rank(const Multigraph& g, const Divisor& d) {
    check_divisor(g, d, "divisor");
    if (!d.effective()) fail(errc::not_effective, "rank test is defined for effective divisors");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (d[v] >= 1) continue;
        if (reduce(g, d, v).divisor[v] < 1) return false;
    }
    return true;
}

struct GonalityResult {
    int gonality = 0;
    Divisor witness;
};

namespace detail {

// Depth-first lexicographic enumeration of candidate chip vectors of a fixed
// degree. Coordinates other than the base vertex are capped at degree-1
// (firing a single overloaded vertex would stay effective otherwise), the
// base vertex carries at least one chip; candidates are then filtered to
// genuinely base-reduced divisors by a burning pass before the rank test.
inline std::optional<Divisor> first_positive_rank_of_degree(const Multigraph& g, int deg) {
    const int n = g.vertex_count();
    std::vector<int> ub(static_cast<size_t>(n));
    ub[0] = deg;
    for (int v = 1; v < n; ++v) ub[static_cast<size_t>(v)] = std::min(deg, g.degree(v) - 1);
    std::vector<int> suffix(static_cast<size_t>(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v) suffix[static_cast<size_t>(v)] = suffix[static_cast<size_t>(v) + 1] + ub[static_cast<size_t>(v)];

    Divisor d(n);
    std::optional<Divisor> found;
    auto rec = [&](auto&& self, int v, int rem) -> bool {
        if (v == n) {
            if (rem != 0) return false;
            if (dhar_burnt(g, d, 0) != full_mask(n)) return false; // not 0-reduced
            if (!has_positive_rank(g, d)) return false;
            found = d;
            return true;
        }
        int lo = std::max(v == 0 ? 1 : 0, rem - suffix[static_cast<size_t>(v) + 1]);
        int hi = std::min(ub[static_cast<size_t>(v)], rem);
        for (int c = lo; c <= hi; ++c) {
            d[v] = c;
            if (self(self, v + 1, rem - c)) return true;
        }
        d[v] = 0;
        return false;
    };
    rec(rec, 0, deg);
    return found;
}

} // namespace detail

// Minimum degree of a positive-rank divisor, with the lexicographically least
// base-reduced witness at that degree. It suffices to scan divisors that are
// reduced toward a fixed base vertex and keep a chip there: the base-reduced
// form of any positive-rank divisor is again effective, equivalent, of the
// same degree, and keeps a chip on the base.
inline GonalityResult gonality(const Multigraph& g, std::optional<int> max_degree = {}) {
    const int n = g.vertex_count();
    if (n < 2) fail(errc::bad_param, "gonality needs at least two vertices");
    const int cap = max_degree.value_or(n);
    if (cap < 1) fail(errc::bad_param, "degree cap must be positive");
    for (int deg = 1; deg <= cap; ++deg) {
        if (auto w = detail::first_positive_rank_of_degree(g, deg)) return {deg, *w};
    }
    fail(errc::cap_exceeded, "no positive-rank divisor up to degree " + std::to_string(cap));
}

// Equivalence via canonical forms: shift both divisors by the same constant
// divisor until effective, then compare their 0-reduced representatives.
inline bool equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    check_divisor(g, d1, "first divisor");
    check_divisor(g, d2, "second divisor");
    if (d1.degree() != d2.degree()) return false;
    int low = 0;
    for (int c : d1.chips) low = std::min(low, c);
    for (int c : d2.chips) low = std::min(low, c);
    Divisor a = d1, b = d2;
    if (low < 0) {
        for (int& c : a.chips) c -= low;
        for (int& c : b.chips) c -= low;
    }
    return reduce(g, a, 0).divisor == reduce(g, b, 0).divisor;
}

// --- divisor file format ----------------------------------------------------

inline void write_divisor_text(std::ostream& out, const Divisor& d) {
    out << "d " << d.size() << "\n";
    for (int v = 0; v < d.size(); ++v)
        if (d[v] != 0) out << "c " << v << " " << d[v] << "\n";
}

inline std::string divisor_to_text(const Divisor& d) {
    std::ostringstream out;
    write_divisor_text(out, d);
    return out.str();
}

inline Divisor read_divisor_text(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) fail(errc::parse_error, "empty divisor file");
    int n = -1;
    Divisor d;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        std::string tag;
        ls >> tag;
        if (i == 0) {
            if (tag != "d" || !(ls >> n) || n <= 0)
                fail(errc::parse_error, "divisor file must start with `d <n>`");
            d = Divisor(n);
            continue;
        }
        int v, c;
        if (tag != "c" || !(ls >> v >> c)) fail(errc::parse_error, "expected `c <vertex> <chips>` line");
        if (v < 0 || v >= n) fail(errc::parse_error, "divisor vertex out of range");
        d[v] = c;
    }
    return d;
}

inline Divisor read_divisor_text(const std::string& text) {
    std::istringstream in(text);
    return read_divisor_text(in);
}

} // namespace scramblekit
