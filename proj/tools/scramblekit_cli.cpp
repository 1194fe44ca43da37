// Command-line front end: generate graph families, compute invariants with
// certificates, and batch-verify tw <= sn <= gon across instances.
//
// Exit codes: 0 ok (and sandwich holds where evaluated), 2 bad parameters or
// malformed input, 3 a cap was exceeded, 4 internal inconsistency (sandwich
// violated or a certificate failed re-verification).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "scramblekit/divisor.hpp"
#include "scramblekit/families.hpp"
#include "scramblekit/io.hpp"
#include "scramblekit/multigraph.hpp"
#include "scramblekit/report.hpp"
#include "scramblekit/scramble.hpp"
#include "scramblekit/treewidth.hpp"

namespace sk = scramblekit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_bad_input = 2;
constexpr int exit_cap = 3;
constexpr int exit_inconsistent = 4;

struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(const sk::error& e) {
    switch (e.code()) {
        case sk::errc::too_large:
        case sk::errc::cap_exceeded:
            return exit_cap;
        default:
            return exit_bad_input;
    }
}

sk::Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) sk::fail(sk::errc::parse_error, "cannot open graph file " + path);
    return sk::read_graph_text(in);
}

sk::Divisor load_divisor(const std::string& path, const sk::Multigraph& g) {
    std::ifstream in(path);
    if (!in) sk::fail(sk::errc::parse_error, "cannot open divisor file " + path);
    sk::Divisor d = sk::read_divisor_text(in);
    sk::check_divisor(g, d, "divisor file");
    return d;
}

sk::Scramble load_scramble(const std::string& path, const sk::Multigraph& g) {
    std::ifstream in(path);
    if (!in) sk::fail(sk::errc::parse_error, "cannot open scramble file " + path);
    return sk::read_scramble_text(in, g);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(out_path);
        if (!out) sk::fail(sk::errc::parse_error, "cannot open output file " + out_path);
        out << content;
    }
}

int thread_budget() {
    if (const char* env = std::getenv("SCRAMBLEKIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string vertex_list(const sk::VertexSet& s) {
    std::string out;
    for (int v : s.to_vector()) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out;
}

// --- gen -----------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::uint64_t seed = 1;
    double edge_prob = 0.5;
    int max_mult = 1;
    std::string out;
    bool dot = false;
};

int param_at(const GenArgs& a, size_t i) {
    if (a.params.size() <= i)
        sk::fail(sk::errc::bad_param, "family " + a.family + " needs more parameters");
    return a.params[i];
}

sk::Multigraph generate(const GenArgs& a) {
    const std::string& f = a.family;
    if (f == "path") return sk::path(param_at(a, 0));
    if (f == "cycle") return sk::cycle(param_at(a, 0));
    if (f == "tree") return sk::random_tree(param_at(a, 0), a.seed);
    if (f == "grid") return sk::grid(param_at(a, 0), param_at(a, 1)).graph;
    if (f == "prism") return sk::stacked_prism(param_at(a, 0), param_at(a, 1)).graph;
    if (f == "torus") return sk::torus(param_at(a, 0), param_at(a, 1)).graph;
    if (f == "plied") return sk::plied_path(param_at(a, 0));
    if (f == "chain") return sk::chain_of_loops(param_at(a, 0));
    if (f == "fig1") return sk::fig1_graph();
    if (f == "fig2") return sk::fig2_wheel();
    if (f == "fig4-left") return sk::fig4_left();
    if (f == "fig4-right") return sk::fig4_right();
    if (f == "random")
        return sk::random_connected_multigraph(param_at(a, 0), a.edge_prob, a.max_mult, a.seed);
    sk::fail(sk::errc::bad_param, "unknown family " + f);
}

int run_gen(const GenArgs& a) {
    sk::Multigraph g = generate(a);
    std::ostringstream body;
    if (a.dot)
        sk::write_dot(body, g);
    else
        sk::write_graph_text(body, g);
    write_output(a.out, body.str());
    return exit_ok;
}

// --- invariants ------------------------------------------------------------------

struct InvariantsArgs {
    std::string graph_path;
    bool tw = false, gon = false, sn_lower = false, sn_exact = false;
    int sn_cap = 6;
    int tw_cap = 20;
    std::vector<int> product; // optional [m, n]
};

void verify_before_emitting(const sk::Multigraph& g, const sk::InvariantReport& r) {
    if (r.tw && sk::width_of_order(g, r.tw->elimination_order) != r.tw->width)
        throw internal_error("treewidth witness failed replay");
    if (r.sn_lower && r.sn_lower_cert) {
        if (!sk::verify_certificate(g, r.sn_lower->best, *r.sn_lower_cert) ||
            r.sn_lower_cert->order != r.sn_lower->value)
            throw internal_error("scramble certificate failed re-verification");
    }
    if (r.gon) {
        if (r.gon->witness.degree() != r.gon->gonality || !sk::has_positive_rank(g, r.gon->witness))
            throw internal_error("gonality witness failed re-ranking");
    }
}

void print_report(const sk::InvariantReport& r) {
    std::cout << "graph " << r.graph_id << ": " << r.n << " vertices, " << r.edge_count
              << " edges\n";
    if (r.tw) {
        std::cout << "treewidth " << r.tw->width << " (order:";
        for (int v : r.tw->elimination_order) std::cout << " " << v;
        std::cout << ") [" << r.tw_ms << " ms]\n";
        std::cout << "::tw=" << r.tw->width << "\n";
    }
    if (r.sn_lower) {
        std::cout << "scramble order lower bound " << r.sn_lower->value << " via "
                  << r.sn_lower->best.size() << " eggs [" << r.sn_lower_ms << " ms]\n";
        if (r.sn_lower_cert) {
            std::cout << "hitting-set: " << vertex_list(r.sn_lower_cert->hitting_set) << "\n";
            if (r.sn_lower_cert->cut_number) {
                const auto& w = *r.sn_lower_cert->cut_witness;
                std::cout << "cut-pair: "
                          << r.sn_lower->best.eggs()[static_cast<size_t>(w.egg_a)].to_string() << " "
                          << r.sn_lower->best.eggs()[static_cast<size_t>(w.egg_b)].to_string()
                          << " value: " << *r.sn_lower_cert->cut_number
                          << " side: " << w.side.to_string() << "\n";
            } else {
                std::cout << "cut=inf\n";
            }
        }
        std::cout << "::sn_lower=" << r.sn_lower->value << "\n";
    }
    if (r.sn_exact_result) {
        std::cout << "scramble number (exhaustive) " << r.sn_exact_result->value << " ["
                  << r.sn_exact_ms << " ms]\n";
        std::cout << "::sn_exact=" << r.sn_exact_result->value << "\n";
    }
    if (r.gon) {
        std::cout << "gonality " << r.gon->gonality << " witness "
                  << sk::divisor_support_string(r.gon->witness) << " [" << r.gon_ms << " ms]\n";
        std::cout << "::gon=" << r.gon->gonality << "\n";
        std::cout << "::gon_witness=" << sk::divisor_support_string(r.gon->witness) << "\n";
    }
    std::cout << "::hash=" << std::hex << r.hash << std::dec << "\n";
    std::cout << "::sandwich_ok=" << (r.sandwich_ok ? 1 : 0) << "\n";
}

int run_invariants(const InvariantsArgs& a) {
    sk::Multigraph g = load_graph(a.graph_path);
    sk::ReportOptions opts;
    bool any = a.tw || a.gon || a.sn_lower || a.sn_exact;
    opts.want_tw = !any || a.tw;
    opts.want_gon = !any || a.gon;
    opts.want_sn_lower = !any || a.sn_lower;
    opts.want_sn_exact = a.sn_exact;
    opts.tw_cap = a.tw_cap;
    opts.sn_exact_cap = a.sn_cap;

    std::optional<sk::Product> product;
    if (!a.product.empty()) {
        if (a.product.size() != 2) sk::fail(sk::errc::bad_param, "--product takes two integers");
        if (a.product[0] * a.product[1] != g.vertex_count())
            sk::fail(sk::errc::no_column_metadata, "--product dimensions do not match the graph");
        product = sk::Product{g, a.product[0], a.product[1]};
        opts.product = &*product;
    }

    sk::InvariantReport r = sk::compute_invariant_report(g, a.graph_path, opts);
    verify_before_emitting(g, r);
    print_report(r);
    return r.sandwich_ok ? exit_ok : exit_inconsistent;
}

// --- order -----------------------------------------------------------------------

int run_order(const std::string& graph_path, const std::string& scramble_path) {
    sk::Multigraph g = load_graph(graph_path);
    sk::Scramble s = load_scramble(scramble_path, g);
    sk::OrderCertificate cert = sk::scramble_order(g, s);
    if (!sk::verify_certificate(g, s, cert))
        throw internal_error("certificate failed re-verification");
    std::cout << "order=" << cert.order << "\n";
    std::cout << "hitting-set: " << vertex_list(cert.hitting_set) << "\n";
    if (cert.cut_number) {
        const auto& w = *cert.cut_witness;
        std::cout << "cut-pair: " << s.eggs()[static_cast<size_t>(w.egg_a)].to_string() << " "
                  << s.eggs()[static_cast<size_t>(w.egg_b)].to_string()
                  << " value: " << *cert.cut_number << " side: " << w.side.to_string() << "\n";
    } else {
        std::cout << "cut=inf\n";
    }
    std::cout << "::order=" << cert.order << "\n";
    std::cout << "::hitting=" << cert.hitting_number << "\n";
    std::cout << "::cut=" << (cert.cut_number ? std::to_string(*cert.cut_number) : "inf") << "\n";
    return exit_ok;
}

// --- small single-invariant commands ----------------------------------------------

int run_tw(const std::string& graph_path, int cap) {
    sk::Multigraph g = load_graph(graph_path);
    sk::TreewidthResult r = sk::treewidth(g, cap);
    if (sk::width_of_order(g, r.elimination_order) != r.width)
        throw internal_error("treewidth witness failed replay");
    std::cout << "treewidth=" << r.width << "\n";
    std::cout << "elimination-order:";
    for (int v : r.elimination_order) std::cout << " " << v;
    std::cout << "\n::tw=" << r.width << "\n";
    return exit_ok;
}

int run_gonality(const std::string& graph_path, std::optional<int> cap) {
    sk::Multigraph g = load_graph(graph_path);
    sk::GonalityResult r = sk::gonality(g, cap);
    if (!sk::has_positive_rank(g, r.witness))
        throw internal_error("gonality witness failed re-ranking");
    std::cout << "gonality=" << r.gonality << "\n";
    std::cout << "witness: " << sk::divisor_support_string(r.witness) << "\n";
    std::cout << "::gon=" << r.gonality << "\n";
    std::cout << "::gon_witness=" << sk::divisor_support_string(r.witness) << "\n";
    return exit_ok;
}

int run_reduce(const std::string& graph_path, const std::string& divisor_path, int v,
               const std::string& out) {
    sk::Multigraph g = load_graph(graph_path);
    sk::Divisor d = load_divisor(divisor_path, g);
    sk::ReduceResult r = sk::reduce(g, d, v);
    if (sk::apply_script(g, d, r.script) != r.divisor)
        throw internal_error("firing script failed replay");
    std::cout << "reduced: " << sk::divisor_support_string(r.divisor) << "\n";
    for (const sk::VertexSet& a : r.script.fired) std::cout << "fired: " << vertex_list(a) << "\n";
    std::cout << "::reduced=" << sk::divisor_support_string(r.divisor) << "\n";
    std::cout << "::script_length=" << r.script.fired.size() << "\n";
    if (!out.empty()) {
        std::ostringstream body;
        sk::write_divisor_text(body, r.divisor);
        write_output(out, body.str());
    }
    return exit_ok;
}

int run_rank(const std::string& graph_path, const std::string& divisor_path) {
    sk::Multigraph g = load_graph(graph_path);
    sk::Divisor d = load_divisor(divisor_path, g);
    bool positive = sk::has_positive_rank(g, d);
    std::cout << "degree=" << d.degree() << "\n";
    std::cout << (positive ? "positive rank\n" : "rank zero or negative\n");
    std::cout << "::positive_rank=" << (positive ? 1 : 0) << "\n";
    return exit_ok;
}

int run_sn_lower(const std::string& graph_path, const std::vector<int>& product_dims) {
    sk::Multigraph g = load_graph(graph_path);
    sk::SnLowerOptions opts;
    std::optional<sk::Product> product;
    if (!product_dims.empty()) {
        if (product_dims.size() != 2) sk::fail(sk::errc::bad_param, "--product takes two integers");
        if (product_dims[0] * product_dims[1] != g.vertex_count())
            sk::fail(sk::errc::no_column_metadata, "--product dimensions do not match the graph");
        product = sk::Product{g, product_dims[0], product_dims[1]};
        opts.product = &*product;
    }
    sk::SnSearchResult r = sk::sn_lower_bound(g, opts);
    sk::OrderCertificate cert = sk::scramble_order(g, r.best);
    if (!sk::verify_certificate(g, r.best, cert) || cert.order != r.value)
        throw internal_error("certificate failed re-verification");
    std::cout << "sn-lower=" << r.value << "\n";
    sk::write_scramble_text(std::cout, r.best);
    std::cout << "hitting-set: " << vertex_list(cert.hitting_set) << "\n";
    if (cert.cut_number) {
        const auto& w = *cert.cut_witness;
        std::cout << "cut-pair: " << r.best.eggs()[static_cast<size_t>(w.egg_a)].to_string() << " "
                  << r.best.eggs()[static_cast<size_t>(w.egg_b)].to_string()
                  << " value: " << *cert.cut_number << "\n";
    } else {
        std::cout << "cut=inf\n";
    }
    std::cout << "::sn_lower=" << r.value << "\n";
    return exit_ok;
}

int run_sn_exact(const std::string& graph_path, int cap) {
    sk::Multigraph g = load_graph(graph_path);
    sk::SnSearchResult r = sk::sn_exact(g, cap);
    sk::OrderCertificate cert = sk::scramble_order(g, r.best);
    if (!sk::verify_certificate(g, r.best, cert) || cert.order != r.value)
        throw internal_error("certificate failed re-verification");
    std::cout << "sn=" << r.value << "\n";
    sk::write_scramble_text(std::cout, r.best);
    std::cout << "::sn_exact=" << r.value << "\n";
    return exit_ok;
}

// --- sweep -----------------------------------------------------------------------

struct SweepArgs {
    std::string family;
    std::string m_range = "";
    std::string n_range = "";
    std::string k_range = "";
    int count = 10;
    std::uint64_t seed = 1;
    double edge_prob = 0.5;
    int max_mult = 2;
    int size = 6;
    int tw_cap = 20;
    int sn_exact_cap = 6;
};

std::pair<int, int> parse_range(const std::string& text, std::pair<int, int> fallback) {
    if (text.empty()) return fallback;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        int v = std::atoi(text.c_str());
        return {v, v};
    }
    return {std::atoi(text.substr(0, colon).c_str()), std::atoi(text.substr(colon + 1).c_str())};
}

struct SweepInstance {
    std::string id;
    sk::Multigraph graph;
    std::optional<sk::Product> product;
};

std::vector<SweepInstance> sweep_instances(const SweepArgs& a) {
    std::vector<SweepInstance> out;
    auto add_product = [&](const std::string& id, sk::Product p) {
        out.push_back({id, p.graph, std::move(p)});
    };
    if (a.family == "grid" || a.family == "prism" || a.family == "torus") {
        auto [m_lo, m_hi] = parse_range(a.m_range, {2, 4});
        auto [n_lo, n_hi] = parse_range(a.n_range, {2, 4});
        for (int m = m_lo; m <= m_hi; ++m)
            for (int n = n_lo; n <= n_hi; ++n) {
                std::string id = a.family + "-" + std::to_string(m) + "x" + std::to_string(n);
                if (a.family == "grid") add_product(id, sk::grid(m, n));
                if (a.family == "prism") add_product(id, sk::stacked_prism(m, n));
                if (a.family == "torus") add_product(id, sk::torus(m, n));
            }
    } else if (a.family == "plied" || a.family == "chain") {
        auto [k_lo, k_hi] = parse_range(a.k_range, {2, 4});
        for (int k = k_lo; k <= k_hi; ++k) {
            std::string id = a.family + "-" + std::to_string(k);
            out.push_back({id, a.family == "plied" ? sk::plied_path(k) : sk::chain_of_loops(k), {}});
        }
    } else if (a.family == "random") {
        for (int i = 0; i < a.count; ++i) {
            std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
            std::string id = "random-n" + std::to_string(a.size) + "-s" + std::to_string(seed);
            out.push_back(
                {id, sk::random_connected_multigraph(a.size, a.edge_prob, a.max_mult, seed), {}});
        }
    } else {
        sk::fail(sk::errc::bad_param, "unknown sweep family " + a.family);
    }
    return out;
}

int run_sweep(const SweepArgs& a) {
    std::vector<SweepInstance> instances = sweep_instances(a);
    std::vector<std::string> lines(instances.size());
    enum class Outcome : char { ok, sandwich_violated, errored, skipped };
    std::vector<Outcome> outcome(instances.size(), Outcome::ok);

    auto work = [&](size_t i) {
        const SweepInstance& inst = instances[i];
        if (inst.graph.vertex_count() < 2) {
            // single-vertex instances carry no invariants to verify
            lines[i] = "::skip graph=" + inst.id + " reason=single-vertex";
            outcome[i] = Outcome::skipped;
            return;
        }
        try {
            sk::ReportOptions opts;
            opts.want_tw = inst.graph.vertex_count() <= a.tw_cap;
            opts.tw_cap = a.tw_cap;
            opts.want_sn_exact = inst.graph.vertex_count() <= a.sn_exact_cap;
            opts.sn_exact_cap = a.sn_exact_cap;
            opts.product = inst.product ? &*inst.product : nullptr;
            sk::InvariantReport r = sk::compute_invariant_report(inst.graph, inst.id, opts);
            lines[i] = sk::report_machine_line(r);
            outcome[i] = r.sandwich_ok ? Outcome::ok : Outcome::sandwich_violated;
        } catch (const std::exception& e) {
            lines[i] = "::error graph=" + inst.id + " what=" + e.what();
            outcome[i] = Outcome::errored;
        }
    };

    int threads = std::min<int>(thread_budget(), static_cast<int>(instances.size()));
    if (threads <= 1) {
        for (size_t i = 0; i < instances.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                for (size_t i = static_cast<size_t>(t); i < instances.size(); i += static_cast<size_t>(threads))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    int violations = 0, errors = 0;
    for (size_t i = 0; i < instances.size(); ++i) {
        std::cout << lines[i] << "\n";
        if (outcome[i] == Outcome::sandwich_violated) ++violations;
        if (outcome[i] == Outcome::errored) ++errors;
    }
    std::cout << "sweep: " << instances.size() << " instances, " << violations
              << " sandwich failures, " << errors << " errors\n";
    if (violations > 0) return exit_inconsistent;
    return errors > 0 ? exit_bad_input : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scramblekit: scramble order, gonality and treewidth of small multigraphs"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a family instance");
    gen->add_option("family", gen_args.family,
                    "path|cycle|tree|grid|prism|torus|plied|chain|fig1|fig2|fig4-left|fig4-right|random")
        ->required();
    gen->add_option("params", gen_args.params, "integer family parameters");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--edge-prob", gen_args.edge_prob, "edge probability (random family)");
    gen->add_option("--max-mult", gen_args.max_mult, "max edge multiplicity (random family)");
    gen->add_option("--out", gen_args.out, "output file (default stdout)");
    gen->add_flag("--dot", gen_args.dot, "emit DOT instead of the text format");

    std::string dot_graph, dot_out;
    auto* exp = app.add_subcommand("export-dot", "convert a graph file to DOT");
    exp->add_option("graph", dot_graph)->required();
    exp->add_option("--out", dot_out, "output file (default stdout)");

    InvariantsArgs inv_args;
    auto* inv = app.add_subcommand("invariants", "compute invariants and check tw <= sn <= gon");
    inv->add_option("graph", inv_args.graph_path)->required();
    inv->add_flag("--tw", inv_args.tw);
    inv->add_flag("--gon", inv_args.gon);
    inv->add_flag("--sn-lower", inv_args.sn_lower);
    inv->add_flag("--sn-exact", inv_args.sn_exact);
    inv->add_option("--cap", inv_args.sn_cap, "sn-exact vertex cap (default 6)");
    inv->add_option("--tw-cap", inv_args.tw_cap, "treewidth vertex cap (default 20)");
    inv->add_option("--product", inv_args.product, "treat the graph as an m x n product")
        ->expected(2);

    std::string order_graph, order_scramble;
    auto* ord = app.add_subcommand("order", "scramble order with certificates");
    ord->add_option("graph", order_graph)->required();
    ord->add_option("scramble", order_scramble)->required();

    std::string tw_graph;
    int tw_cap = 20;
    auto* twc = app.add_subcommand("tw", "exact treewidth with elimination order");
    twc->add_option("graph", tw_graph)->required();
    twc->add_option("--tw-cap", tw_cap);

    std::string gon_graph;
    int gon_cap = -1;
    auto* gon = app.add_subcommand("gonality", "exact gonality with witness divisor");
    gon->add_option("graph", gon_graph)->required();
    gon->add_option("--max-degree", gon_cap, "search cap (default: vertex count)");

    std::string red_graph, red_divisor, red_out;
    int red_vertex = 0;
    auto* red = app.add_subcommand("reduce", "reduce a divisor toward a vertex");
    red->add_option("graph", red_graph)->required();
    red->add_option("divisor", red_divisor)->required();
    red->add_option("vertex", red_vertex)->required();
    red->add_option("--out", red_out, "write the reduced divisor to a file");

    std::string rank_graph, rank_divisor;
    auto* rnk = app.add_subcommand("rank", "test a divisor for positive rank");
    rnk->add_option("graph", rank_graph)->required();
    rnk->add_option("divisor", rank_divisor)->required();

    std::string snl_graph;
    std::vector<int> snl_product;
    auto* snl = app.add_subcommand("sn-lower", "best scramble from the construction portfolio");
    snl->add_option("graph", snl_graph)->required();
    snl->add_option("--product", snl_product, "treat the graph as an m x n product")->expected(2);

    std::string sne_graph;
    int sne_cap = 6;
    auto* sne = app.add_subcommand("sn-exact", "exhaustive scramble number (tiny graphs)");
    sne->add_option("graph", sne_graph)->required();
    sne->add_option("--cap", sne_cap, "vertex cap (default 6)");

    SweepArgs sweep_args;
    auto* swp = app.add_subcommand("sweep", "batch invariants over a family");
    swp->add_option("family", sweep_args.family, "grid|prism|torus|plied|chain|random")->required();
    swp->add_option("--m", sweep_args.m_range, "range a:b for the first parameter");
    swp->add_option("--n", sweep_args.n_range, "range a:b for the second parameter");
    swp->add_option("--k", sweep_args.k_range, "range a:b for one-parameter families");
    swp->add_option("--count", sweep_args.count, "number of random instances");
    swp->add_option("--size", sweep_args.size, "vertex count for random instances");
    swp->add_option("--seed", sweep_args.seed, "base seed for random instances");
    swp->add_option("--edge-prob", sweep_args.edge_prob);
    swp->add_option("--max-mult", sweep_args.max_mult);
    swp->add_option("--tw-cap", sweep_args.tw_cap);
    swp->add_option("--sn-exact-cap", sweep_args.sn_exact_cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (exp->parsed()) {
            sk::Multigraph g = load_graph(dot_graph);
            std::ostringstream body;
            sk::write_dot(body, g);
            write_output(dot_out, body.str());
            return exit_ok;
        }
        if (inv->parsed()) return run_invariants(inv_args);
        if (ord->parsed()) return run_order(order_graph, order_scramble);
        if (twc->parsed()) return run_tw(tw_graph, tw_cap);
        if (gon->parsed())
            return run_gonality(gon_graph, gon_cap > 0 ? std::optional<int>(gon_cap) : std::nullopt);
        if (red->parsed()) return run_reduce(red_graph, red_divisor, red_vertex, red_out);
        if (rnk->parsed()) return run_rank(rank_graph, rank_divisor);
        if (snl->parsed()) return run_sn_lower(snl_graph, snl_product);
        if (sne->parsed()) return run_sn_exact(sne_graph, sne_cap);
        if (swp->parsed()) return run_sweep(sweep_args);
    } catch (const internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const sk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
