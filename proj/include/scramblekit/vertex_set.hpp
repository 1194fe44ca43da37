#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "scramblekit/error.hpp"

namespace scramblekit {

namespace detail {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace detail

// Subset of the vertices 0..n-1 of a fixed graph, stored as a bitmask.
// The universe size travels with the set so complements are well defined.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet empty_of(int n) { return VertexSet(n, 0); }
    static VertexSet all_of(int n) { return VertexSet(n, detail::full_mask(n)); }

    static VertexSet from_mask(int n, std::uint64_t mask) {
        if ((mask & ~detail::full_mask(n)) != 0)
            fail(errc::bad_param, "vertex set mask exceeds universe");
        return VertexSet(n, mask);
    }

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s = empty_of(n);
        for (int v : vs) s = s.with(v);
        return s;
    }

    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s = empty_of(n);
        for (int v : vs) s = s.with(v);
        return s;
    }

    int universe() const { return n_; }
    std::uint64_t mask() const { return bits_; }

    bool empty() const { return bits_ == 0; }
    bool is_all() const { return bits_ == detail::full_mask(n_); }
    int count() const { return std::popcount(bits_); }

    bool contains(int v) const { return v >= 0 && v < n_ && (bits_ & detail::bit(v)) != 0; }

    VertexSet with(int v) const {
        check_vertex(v);
        return VertexSet(n_, bits_ | detail::bit(v));
    }

    VertexSet without(int v) const {
        check_vertex(v);
        return VertexSet(n_, bits_ & ~detail::bit(v));
    }

    VertexSet complement() const { return VertexSet(n_, ~bits_ & detail::full_mask(n_)); }

    VertexSet operator|(const VertexSet& o) const {
        check_same(o);
        return VertexSet(n_, bits_ | o.bits_);
    }

    VertexSet operator&(const VertexSet& o) const {
        check_same(o);
        return VertexSet(n_, bits_ & o.bits_);
    }

    VertexSet minus(const VertexSet& o) const {
        check_same(o);
        return VertexSet(n_, bits_ & ~o.bits_);
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        return (bits_ & o.bits_) != 0;
    }

    bool subset_of(const VertexSet& o) const {
        check_same(o);
        return (bits_ & ~o.bits_) == 0;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lowest vertex id in the set; -1 when empty.
    int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        s += "}";
        return s;
    }

private:
    VertexSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) fail(errc::bad_param, "vertex id out of range");
    }

    void check_same(const VertexSet& o) const {
        if (n_ != o.n_) fail(errc::graph_mismatch, "vertex sets over different universes");
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

} // namespace scramblekit
