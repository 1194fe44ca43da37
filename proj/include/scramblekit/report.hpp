#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include "scramblekit/divisor.hpp"
#include "scramblekit/io.hpp"
#include "scramblekit/multigraph.hpp"
#include "scramblekit/scramble.hpp"
#include "scramblekit/treewidth.hpp"

namespace scramblekit {

inline std::uint64_t graph_hash(const Multigraph& g) {
    // FNV-1a over the canonical text form
    std::uint64_t h = 1469598103934665603ull;
    for (char c : graph_to_text(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Per-graph record of every computed invariant plus the sandwich
// consistency flag (tw <= sn <= gon over whatever was computed).
struct InvariantReport {
    std::string graph_id;
    std::uint64_t hash = 0;
    int n = 0;
    int edge_count = 0;

    std::optional<TreewidthResult> tw;
    std::optional<SnSearchResult> sn_lower;
    std::optional<OrderCertificate> sn_lower_cert;
    std::optional<SnSearchResult> sn_exact_result;
    std::optional<GonalityResult> gon;

    bool sandwich_ok = true;

    double tw_ms = 0, sn_lower_ms = 0, sn_exact_ms = 0, gon_ms = 0;
};

struct ReportOptions {
    bool want_tw = true;
    bool want_sn_lower = true;
    bool want_sn_exact = false;
    bool want_gon = true;
    int tw_cap = 20;
    int sn_exact_cap = 6;
    std::optional<int> gon_cap; // defaults to n inside gonality()
    const Product* product = nullptr;
};

namespace detail {

struct StageTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

} // namespace detail

inline InvariantReport compute_invariant_report(const Multigraph& g, const std::string& id,
                                                const ReportOptions& opts) {
    InvariantReport r;
    r.graph_id = id;
    r.hash = graph_hash(g);
    r.n = g.vertex_count();
    r.edge_count = g.total_edge_count();

    if (opts.want_tw) {
        detail::StageTimer t;
        r.tw = treewidth(g, opts.tw_cap);
        r.tw_ms = t.ms();
    }
    if (opts.want_sn_lower) {
        detail::StageTimer t;
        SnLowerOptions lo;
        lo.product = opts.product;
        r.sn_lower = sn_lower_bound(g, lo);
        r.sn_lower_cert = scramble_order(g, r.sn_lower->best);
        r.sn_lower_ms = t.ms();
    }
    if (opts.want_sn_exact) {
        detail::StageTimer t;
        r.sn_exact_result = sn_exact(g, opts.sn_exact_cap);
        r.sn_exact_ms = t.ms();
    }
    if (opts.want_gon) {
        detail::StageTimer t;
        r.gon = gonality(g, opts.gon_cap);
        r.gon_ms = t.ms();
    }

    auto check = [&](bool ok) { r.sandwich_ok = r.sandwich_ok && ok; };
    if (r.tw && r.sn_lower) check(r.tw->width <= r.sn_lower->value);
    if (r.tw && r.sn_exact_result) check(r.tw->width <= r.sn_exact_result->value);
    if (r.tw && r.gon) check(r.tw->width <= r.gon->gonality);
    if (r.sn_lower && r.gon) check(r.sn_lower->value <= r.gon->gonality);
    if (r.sn_exact_result && r.gon) check(r.sn_exact_result->value <= r.gon->gonality);
    if (r.sn_lower && r.sn_exact_result) check(r.sn_lower->value <= r.sn_exact_result->value);
    return r;
}

inline std::string divisor_support_string(const Divisor& d) {
    std::string s;
    for (int v = 0; v < d.size(); ++v) {
        if (d[v] == 0) continue;
        if (!s.empty()) s += ",";
        s += std::to_string(v) + ":" + std::to_string(d[v]);
    }
    return s.empty() ? "-" : s;
}

// One stable machine-readable line; no timings (those vary run to run).
inline std::string report_machine_line(const InvariantReport& r) {
    std::string line = "::report graph=" + r.graph_id + " n=" + std::to_string(r.n) +
                       " edges=" + std::to_string(r.edge_count);
    if (r.tw) line += " tw=" + std::to_string(r.tw->width);
    if (r.sn_lower) line += " sn_lower=" + std::to_string(r.sn_lower->value);
    if (r.sn_exact_result) line += " sn_exact=" + std::to_string(r.sn_exact_result->value);
    if (r.gon) line += " gon=" + std::to_string(r.gon->gonality);
    line += " sandwich_ok=";
    line += r.sandwich_ok ? "1" : "0";
    return line;
}

} // namespace scramblekit
