// Acceptance checklist. Each numbered criterion runs end to end against the
// published values and prints exactly one PASS/FAIL line; the process exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scramblekit/divisor.hpp"
#include "scramblekit/families.hpp"
#include "scramblekit/multigraph.hpp"
#include "scramblekit/scramble.hpp"
#include "scramblekit/treewidth.hpp"

using namespace scramblekit;

namespace {

struct Checklist {
    int failures = 0;

    void run(const std::string& name, const std::function<void(std::ostringstream&)>& body) {
        std::ostringstream detail;
        bool ok = true;
        std::string why;
        try {
            body(detail);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        if (!detail.str().empty() && detail.str().find("FAIL") != std::string::npos) ok = false;
        std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.str().empty() ? "" : (" | " + detail.str()).c_str(),
                    why.empty() ? "" : (" | exception: " + why).c_str());
        if (!ok) ++failures;
    }
};

void expect(std::ostringstream& out, bool cond, const std::string& what) {
    if (!cond) out << "FAIL{" << what << "} ";
}

template <typename T>
void expect_eq(std::ostringstream& out, const T& got, const T& want, const std::string& what) {
    if (!(got == want)) out << "FAIL{" << what << ": got " << got << ", want " << want << "} ";
}

} // namespace

int main() {
    Checklist list;

    list.run("AC-01 grid gonality min(m,n) for m,n <= 4", [](std::ostringstream& out) {
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                if (m == 1 && n == 1) continue; // single vertex: excluded from invariants
                int got = gonality(grid(m, n).graph).gonality;
                expect_eq(out, got, std::min(m, n),
                          "gon(grid " + std::to_string(m) + "x" + std::to_string(n) + ")");
            }
    });

    list.run("AC-02 stacked prisms: gon = columns order = min(m,2n); tw(Y42)=3 < sn",
             [](std::ostringstream& out) {
                 const std::vector<std::pair<int, int>> cases = {{3, 2}, {4, 2}, {5, 2}, {4, 3}, {6, 3}};
                 for (auto [m, n] : cases) {
                     Product p = stacked_prism(m, n);
                     int want = std::min(m, 2 * n);
                     std::string id = "Y(" + std::to_string(m) + "," + std::to_string(n) + ")";
                     expect_eq(out, gonality(p.graph).gonality, want, "gon " + id);
                     expect_eq(out, scramble_order(p.graph, columns_scramble(p)).order, want,
                               "columns order " + id);
                 }
                 Product y42 = stacked_prism(4, 2);
                 int tw = treewidth(y42.graph).width;
                 int sn = scramble_order(y42.graph, columns_scramble(y42)).order;
                 expect_eq(out, tw, 3, "tw(Y42)");
                 expect(out, tw < sn && sn == gonality(y42.graph).gonality, "tw < sn = gon on Y42");
             });

    list.run("AC-03 tori: gon = punctured-columns order = min(2m,2n)", [](std::ostringstream& out) {
        const std::vector<std::pair<int, int>> cases = {{2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}};
        for (auto [m, n] : cases) {
            Product p = torus(m, n);
            int want = std::min(2 * m, 2 * n);
            std::string id = "T(" + std::to_string(m) + "," + std::to_string(n) + ")";
            expect_eq(out, gonality(p.graph).gonality, want, "gon " + id);
            expect_eq(out, scramble_order(p.graph, punctured_columns_scramble(p)).order, want,
                      "punctured order " + id);
        }
    });

    list.run("AC-04 figure pipeline: gon(fig1)=3 via 3v, tw(fig1)=3, contract->wheel order 4",
             [](std::ostringstream& out) {
                 Multigraph f1 = fig1_graph();
                 expect_eq(out, gonality(f1).gonality, 3, "gon(fig1)");
                 expect(out, has_positive_rank(f1, Divisor::at(8, fig1_marked_vertex(), 3)),
                        "3v has positive rank");
                 int tw = treewidth(f1).width;
                 expect_eq(out, tw, 3, "tw(fig1)");
                 // tw = 3 <= sn <= gon = 3 certifies sn(fig1) = 3
                 Edge e = fig1_marked_edge();
                 expect(out, contract_edge(f1, e.u, e.v).graph == fig2_wheel(), "contract e -> wheel");
                 int wheel_order = scramble_order(fig2_wheel(), fig2_scramble()).order;
                 expect_eq(out, wheel_order, 4, "order of the wheel scramble");
                 expect(out, wheel_order > 3, "minor with larger scramble order");
             });

    list.run("AC-05 plied paths: tw 1, singleton order k, gon k", [](std::ostringstream& out) {
        for (int k = 2; k <= 4; ++k) {
            Multigraph g = plied_path(k);
            expect_eq(out, treewidth(g).width, 1, "tw(plied " + std::to_string(k) + ")");
            expect_eq(out, scramble_order(g, singleton_scramble(g)).order, k,
                      "singleton order (plied " + std::to_string(k) + ")");
            expect_eq(out, gonality(g).gonality, k, "gon(plied " + std::to_string(k) + ")");
        }
    });

    list.run("AC-06 chains of loops: gon = ceil((k+2)/2), tw 2, gon > 2 = sn for k >= 3",
             [](std::ostringstream& out) {
                 for (int k = 2; k <= 5; ++k) {
                     Multigraph g = chain_of_loops(k);
                     int got = gonality(g).gonality;
                     int want = (k + 2 + 1) / 2; // ceil((k+2)/2)
                     expect_eq(out, got, want, "gon(chain " + std::to_string(k) + ")");
                     expect_eq(out, treewidth(g, 22).width, 2, "tw(chain " + std::to_string(k) + ")");
                     if (k >= 3) {
                         int sn = sn_lower_bound(g).value;
                         expect_eq(out, sn, 2, "sn lower bound (chain " + std::to_string(k) + ")");
                         expect(out, got > 2, "gon > 2 on chain " + std::to_string(k));
                     }
                 }
             });

    list.run("AC-07 figure 4: gon 2 vs 3; subdivision transport preserves every tested order",
             [](std::ostringstream& out) {
                 Multigraph left = fig4_left(), right = fig4_right();
                 expect_eq(out, gonality(left).gonality, 2, "gon(fig4 left)");
                 expect_eq(out, gonality(right).gonality, 3, "gon(fig4 right)");

                 std::mt19937_64 rng(71);
                 std::vector<Scramble> tested = {singleton_scramble(left)};
                 for (int i = 0; i < 25; ++i)
                     tested.push_back(oracles::random_scramble(left, rng, 2 + static_cast<int>(rng() % 3), 3));
                 for (const Scramble& s : tested) {
                     int before = scramble_order(left, s).order;
                     int after = scramble_order(right, subdivision_transport(left, s, right, 1, 3)).order;
                     expect_eq(out, after, before, "transported order");
                 }
             });

    list.run("AC-08 exact-sn oracle suite: sandwich, trees, cycles, subdivision invariance",
             [](std::ostringstream& out) {
                 int checked = 0;
                 auto sandwich = [&](const Multigraph& g) {
                     int tw = treewidth(g).width;
                     int sn = sn_exact(g, 6).value;
                     int gon = gonality(g).gonality;
                     expect(out, tw <= sn && sn <= gon,
                            "sandwich tw=" + std::to_string(tw) + " sn=" + std::to_string(sn) +
                                " gon=" + std::to_string(gon));
                     ++checked;
                     return sn;
                 };

                 // every connected multigraph on up to 4 vertices, multiplicity <= 3,
                 // each also subdivided once
                 for (int n = 2; n <= 4; ++n) {
                     for (const Multigraph& g : oracles::all_connected_multigraphs(n, 3)) {
                         int sn = sandwich(g);
                         const Edge e = g.edges().front();
                         expect_eq(out, sn_exact(subdivide_edge(g, e.u, e.v), 6).value, sn,
                                   "sn after subdivision");
                     }
                 }

                 // 50 seeded instances on 5 and 6 vertices
                 for (int seed = 1; seed <= 25; ++seed) {
                     Multigraph g5 = random_connected_multigraph(5, 0.5, 3, seed);
                     int sn5 = sandwich(g5);
                     const Edge e = g5.edges().front();
                     expect_eq(out, sn_exact(subdivide_edge(g5, e.u, e.v), 6).value, sn5,
                               "sn after subdivision (n=5 seed)");
                     sandwich(random_connected_multigraph(6, 0.5, 3, seed));
                 }

                 for (int seed = 1; seed <= 10; ++seed)
                     expect_eq(out, sn_exact(random_tree(6, seed)).value, 1, "sn(tree)");
                 for (int n = 3; n <= 6; ++n)
                     expect_eq(out, sn_exact(cycle(n)).value, 2, "sn(cycle)");
                 out << "graphs=" << checked << " ";
             });

    list.run("AC-09 cut/hitting reductions vs 2^n brute force on 200 seeded pairs",
             [](std::ostringstream& out) {
                 std::mt19937_64 rng(73);
                 for (int i = 0; i < 200; ++i) {
                     int n = 4 + static_cast<int>(rng() % 3); // 4..6
                     Multigraph g = random_connected_multigraph(n, 0.5, 3, 9000 + i);
                     Scramble s = oracles::random_scramble(g, rng, 2 + static_cast<int>(rng() % 4), 4);
                     auto got_cut = cut_number(g, s).value;
                     auto want_cut = oracles::cut_number(g, s);
                     expect(out, got_cut == want_cut, "cut number mismatch at pair " + std::to_string(i));
                     expect_eq(out, hitting_number(g, s).count, oracles::hitting_number(g, s),
                               "hitting number at pair " + std::to_string(i));
                 }
             });

    list.run("AC-10 divisor oracles: burning = definition, scripts replay, forms canonical",
             [](std::ostringstream& out) {
                 std::vector<Multigraph> corpus;
                 for (int n = 2; n <= 5; ++n)
                     for (const Multigraph& g : oracles::all_connected_simple_graphs(n))
                         corpus.push_back(g);
                 for (int n = 2; n <= 4; ++n)
                     for (const Multigraph& g : oracles::all_connected_multigraphs(n, 3))
                         corpus.push_back(g);
                 for (int seed = 0; seed < 100; ++seed)
                     corpus.push_back(random_connected_multigraph(5, 0.55, 3, 11000 + seed));

                 std::mt19937_64 rng(79);
                 for (const Multigraph& g : corpus) {
                     const int n = g.vertex_count();
                     for (const Divisor& d : oracles::effective_divisors_up_to(n, 3)) {
                         for (int v = 0; v < n; ++v) {
                             if (is_reduced(g, d, v) != oracles::is_reduced(g, d, v)) {
                                 out << "FAIL{burning disagrees on n=" << n << "} ";
                                 return;
                             }
                         }
                     }
                     // scripts replay; equivalent divisors share a reduced form
                     Divisor d(n);
                     for (int v = 0; v < n; ++v) d[v] = static_cast<int>(rng() % 3);
                     int target = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                     ReduceResult r = reduce(g, d, target);
                     expect(out, apply_script(g, d, r.script) == r.divisor, "script replay");
                     Divisor moved = d;
                     for (int hop = 0; hop < 2; ++hop) {
                         VertexSet a = VertexSet::from_mask(n, 1 + rng() % (detail::full_mask(n) - 1));
                         Divisor next = fire_set(g, moved, a);
                         if (next.effective()) moved = next;
                     }
                     expect(out, reduce(g, moved, target).divisor == r.divisor, "canonical form");
                 }
             });

    list.run("AC-11 bramble order bounds on 100 generated brambles and strict brambles",
             [](std::ostringstream& out) {
                 std::mt19937_64 rng(83);
                 int strict_count = 0, bramble_count = 0, i = 0;
                 while ((strict_count < 50 || bramble_count < 50) && i < 2000) {
                     ++i;
                     Multigraph g =
                         random_connected_multigraph(4 + static_cast<int>(rng() % 3), 0.55, 2, 13000 + i);
                     bool want_strict = strict_count < 50;
                     auto s = oracles::random_bramble(g, rng, 2 + static_cast<int>(rng() % 3), want_strict);
                     if (!s) continue;
                     int k = hitting_number(g, *s).count;
                     int order = scramble_order(g, *s).order;
                     if (want_strict && is_strict_bramble(g, *s)) {
                         ++strict_count;
                         expect_eq(out, order, k, "strict bramble order");
                     } else if (is_bramble(g, *s)) {
                         ++bramble_count;
                         expect(out, order == k || order == k - 1, "bramble order in {k-1,k}");
                     }
                 }
                 expect(out, strict_count >= 50 && bramble_count >= 50, "generated enough instances");
             });

    if (list.failures) std::printf("%d criterion(s) failed\n", list.failures);
    return list.failures == 0 ? 0 : 1;
}
