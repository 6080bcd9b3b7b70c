// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "blg/bilabeled.hpp"
#include "blg/canonical.hpp"
#include "blg/category.hpp"
#include "blg/enumerate.hpp"
#include "blg/fourcolor.hpp"
#include "blg/hommatrix.hpp"
#include "blg/intertwine.hpp"
#include "blg/isotest.hpp"
#include "blg/partition.hpp"
#include "blg/planarity.hpp"
#include "util.hpp"

using namespace blg;
using namespace blg::testutil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const char* name, bool pass, Clock::time_point t0) {
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] %2d %s (%.1fs)\n", pass ? "PASS" : "FAIL", num, name, secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

Graph random_target(std::mt19937_64& rng, int n_max, bool loops = true) {
    std::uniform_int_distribution<int> nd(1, n_max);
    return random_graph(rng, nd(rng), 0.5, loops);
}

BiLabeledGraph random_member(std::mt19937_64& rng, int n_max, int l, int k, double p = 0.35) {
    for (;;) {
        BiLabeledGraph h = random_blg(rng, n_max, l, k, p, false);
        if (in_P(h)) return h;
    }
}

// All members of the planar class up to the given underlying order and total
// arity, one representative per bi-labeled isomorphism class.
std::vector<BiLabeledGraph> planar_class_members(int n_max, int arity_max, bool loops) {
    EnumerateOptions opts;
    opts.allow_loops = loops;
    std::vector<BiLabeledGraph> out;
    std::set<std::string> seen;
    for (const Graph& g : enumerate_graphs_up_to(n_max, opts)) {
        int n = g.n();
        for (int total = 0; total <= arity_max; ++total) {
            long long combos = 1;
            for (int i = 0; i < total; ++i) combos *= n;
            for (int l = 0; l <= total; ++l) {
                int k = total - l;
                for (long long code = 0; code < combos; ++code) {
                    BiLabeledGraph h{g, {}, {}};
                    long long c = code;
                    for (int i = 0; i < l; ++i) {
                        h.out.push_back(static_cast<int>(c % n));
                        c /= n;
                    }
                    for (int i = 0; i < k; ++i) {
                        h.in.push_back(static_cast<int>(c % n));
                        c /= n;
                    }
                    if (!in_P(h)) continue;
                    if (seen.insert(blg_certificate(h)).second) out.push_back(h);
                }
            }
        }
    }
    return out;
}

bool matrices_equal(const HomMatrix& a, const HomMatrix& b) { return a == b; }

void c1_correspondence() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> arity(0, 3);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int l1 = arity(rng), mid = arity(rng), k2 = arity(rng);
        BiLabeledGraph h1 = random_blg(rng, 5, l1, mid, 0.4, true);
        BiLabeledGraph h2 = random_blg(rng, 5, mid, k2, 0.4, true);
        BiLabeledGraph h3 = random_blg(rng, 5, l1, mid, 0.4, true);
        Graph g = random_target(rng, 4);
        HomMatrix t1 = hom_matrix(h1, g), t2 = hom_matrix(h2, g), t3 = hom_matrix(h3, g);
        ok = ok && matrices_equal(hom_matrix(compose(h1, h2), g), mat_multiply(t1, t2));
        ok = ok && matrices_equal(hom_matrix(tensor(h1, h2), g), mat_tensor(t1, t2));
        ok = ok && matrices_equal(hom_matrix(schur(h1, h3), g), mat_schur(t1, t3));
        ok = ok && matrices_equal(hom_matrix(transpose(h1), g), mat_transpose(t1));
    }
    report(1, "matrix correspondence for compose/tensor/schur/transpose", ok, t0);
}

void c2_generator_identities() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(102);
    Graph g = random_target(rng, 3);
    bool ok = true;
    auto both = [&](const GeneratorExpression& e, const BiLabeledGraph& direct) {
        ok = ok && blg_isomorphic(eval_blg(e), direct);
        ok = ok && matrices_equal(eval_matrix(e, g), hom_matrix(direct, g));
    };
    both(expr_identity(), gen_I());
    // building the multiplication family one wire at a time, in both directions
    for (int j = 1; j <= 3; ++j) {
        BiLabeledGraph up = compose(gen_M(1, j), tensor(gen_M(1, 2), identity_tensor(j - 1)));
        ok = ok && blg_isomorphic(up, gen_M(1, j + 1));
        BiLabeledGraph down = compose(tensor(transpose(gen_M(1, 2)), identity_tensor(j - 1)),
                                      transpose(gen_M(1, j)));
        ok = ok && blg_isomorphic(down, gen_M(j + 1, 1));
    }
    for (int l = 0; l <= 4; ++l)
        for (int k = 0; k <= 4; ++k) {
            if (l + k == 0) continue;
            both(expr_M(l, k), gen_M(l, k));
            both(expr_M_looped(l, k), gen_M_looped(l, k));
        }
    for (int m = 1; m <= 3; ++m)
        for (int d = 1; d <= 3; ++d)
            for (auto variant : {StarVariant::plain, StarVariant::left, StarVariant::right})
                for (bool looped : {false, true})
                    both(expr_star(m, d, variant, looped), gen_star(m, d, variant, looped));
    report(2, "generator construction identities as graphs and matrices", ok, t0);
}

void c3_closure() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> arity(0, 3);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int l1 = arity(rng), mid = arity(rng), k2 = arity(rng);
        BiLabeledGraph h1 = random_member(rng, 7, l1, mid);
        BiLabeledGraph h2 = random_member(rng, 7, mid, k2);
        ok = ok && in_P(compose(h1, h2));
        ok = ok && in_P(tensor(h1, h2));
        ok = ok && in_P(transpose(h1));
        // entrywise closure at total arity up to two
        int sl = trial % 2, sk = (trial / 2) % 2;
        BiLabeledGraph s1 = random_member(rng, 7, sl, sk);
        BiLabeledGraph s2 = random_member(rng, 7, sl, sk);
        ok = ok && in_P(schur(s1, s2));
    }
    report(3, "closure of the planar class under the four operations", ok, t0);
}

void c4_plucking_round_trip() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(104);
    Graph target = random_graph(rng, 4, 0.5, true);
    // full loopless corpus to five vertices, full looped corpus to four
    auto members = planar_class_members(5, 4, false);
    auto looped = planar_class_members(4, 4, true);
    members.insert(members.end(), looped.begin(), looped.end());
    bool ok = !members.empty();
    size_t bad = 0;
    for (const BiLabeledGraph& h : members) {
        GeneratorExpression e = decompose(h);
        bool good = blg_isomorphic(eval_blg(e), h) &&
                    matrices_equal(eval_matrix(e, target), hom_matrix(h, target));
        if (!good && ++bad == 1)
            std::fprintf(stderr, "first decomposition failure: n=%d l=%d k=%d\n", h.graph.n(),
                         h.l(), h.k());
        ok = ok && good;
    }
    std::fprintf(stderr, "  (round-tripped %zu planar-class members)\n", members.size());
    report(4, "decomposition round trip over the enumerated planar class", ok, t0);
}

void c5_noncrossing() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(105);
    bool ok = true;
    for (int total = 0; total <= 6; ++total)
        for (int l = 0; l <= total; ++l) {
            int k = total - l;
            for (LabeledPartition p : enumerate_partitions(l, k)) {
                ok = ok && (is_noncrossing(p) == in_P(partition_to_blg(p)));
                if (total > 4) continue;  // matrix side at moderate sizes
                for (int empty = 0; empty <= 2; ++empty) {
                    p.empty_parts = empty;
                    Graph g = random_target(rng, 4);
                    int n = g.n();
                    HomMatrix t = hom_matrix(partition_to_blg(p), g);
                    BigInt factor = 1;
                    for (int i = 0; i < empty; ++i) factor *= n;
                    for (long long r = 0; r < t.rows() && ok; ++r)
                        for (long long c = 0; c < t.cols() && ok; ++c) {
                            // value at point index q along the order a_1..a_l b_k..b_1
                            auto point = [&](int q) {
                                if (q < l) {
                                    long long div = 1;
                                    for (int i = l - 1 - q; i > 0; --i) div *= n;
                                    return static_cast<int>(r / div % n);
                                }
                                int pos = l + k - q - 1;  // position in the in tuple
                                long long div = 1;
                                for (int i = k - 1 - pos; i > 0; --i) div *= n;
                                return static_cast<int>(c / div % n);
                            };
                            bool constant = true;
                            for (const auto& block : p.blocks)
                                for (size_t i = 1; i < block.size(); ++i)
                                    if (point(block[i]) != point(block[0])) constant = false;
                            ok = ok && t.at(r, c) == (constant ? factor : BigInt(0));
                        }
                }
            }
        }
    report(5, "non-crossing partitions match the edgeless planar class", ok, t0);
}

void c6_edge_kills_edgeless_target() {
    auto t0 = Clock::now();
    Graph empty3(3);
    bool ok = true;
    for (const BiLabeledGraph& h : planar_class_members(4, 4, true)) {
        if (h.graph.edge_count() == 0) continue;
        HomMatrix t = hom_matrix(h, empty3);
        for (const BigInt& x : t.e) ok = ok && x == 0;
    }
    report(6, "members with an edge vanish on the edgeless target", ok, t0);
}

FourColorReport pipeline_report;

void c7_four_color() {
    auto t0 = Clock::now();
    pipeline_report = verify_theorem(5, 4);
    bool ok = true;
    for (const auto& c : pipeline_report.checks) {
        if (c.name == "wl2_does_not_separate") continue;  // criterion 8
        if (!c.pass) std::fprintf(stderr, "  pipeline check failed: %s\n", c.name.c_str());
        ok = ok && c.pass;
    }
    report(7, "S4 Cayley pair pipeline at corpus bound 5", ok, t0);
}

void c8_wl2() {
    auto t0 = Clock::now();
    bool ok = false;
    for (const auto& c : pipeline_report.checks)
        if (c.name == "wl2_does_not_separate") ok = c.pass;
    report(8, "2-WL does not separate the Cayley pair", ok, t0);
}

void c9_lovasz_baseline() {
    auto t0 = Clock::now();
    auto classes = enumerate_graphs_up_to(4);
    bool ok = true;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j) {
            auto r = lovasz_iso(classes[i], classes[j]);
            ok = ok && r.distinguished && r.witness && r.witness->n() <= 4;
        }
    report(9, "hom counts separate all loopless pairs up to four vertices", ok, t0);
}

void c10_oracles() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(110);
    bool ok = true;
    std::uniform_int_distribution<int> nk(1, 5);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Graph k = random_graph(rng, nk(rng), 0.45, true);
        Graph g = random_target(rng, 4);
        ok = ok && hom_count_dp(k, g) == hom_count(k, g);
    }
    for (int m = 3; m <= 6 && ok; ++m)
        for (int trial = 0; trial < 10 && ok; ++trial) {
            Graph g = random_target(rng, 4);
            int n = g.n();
            std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0)), pw;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
            pw = a;
            for (int e = 1; e < m; ++e) {
                std::vector<std::vector<BigInt>> nx(n, std::vector<BigInt>(n, 0));
                for (int i = 0; i < n; ++i)
                    for (int t = 0; t < n; ++t)
                        for (int j = 0; j < n; ++j) nx[i][j] += pw[i][t] * a[t][j];
                pw = nx;
            }
            BigInt trace = 0;
            for (int i = 0; i < n; ++i) trace += pw[i][i];
            ok = ok && hom_count(cycle(m), g) == trace;
        }
    int done = 0;
    while (done < 200 && ok) {
        Graph k = random_graph(rng, 4, 0.6);
        auto es = k.edges();
        if (es.empty() || es[0].first == es[0].second) continue;
        Graph x = random_graph(rng, 3, 0.5, true);
        ok = ok && complement_identity(k, es[0].first, es[0].second, x).ok;
        ++done;
    }
    report(10, "independent oracles agree: DP counts, cycle traces, edge identities", ok, t0);
}

void c11_monotone_refinement() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(111);
    bool ok = true;
    std::uniform_int_distribution<int> nd(2, 8);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        Graph g = random_graph(rng, nd(rng), 0.4);
        auto o2 = orbit_refinement(g, 2), o3 = orbit_refinement(g, 3),
             o4 = orbit_refinement(g, 4);
        ok = ok && o3.is_refinement_of(o2) && o4.is_refinement_of(o3);
        auto p2 = orbital_refinement(g, 2), p3 = orbital_refinement(g, 3),
             p4 = orbital_refinement(g, 4);
        ok = ok && p3.is_refinement_of(p2) && p4.is_refinement_of(p3);
    }
    for (const Graph& g :
         {cycle(6), complete(4), cayley_s4(CayleyWhich::G), cayley_s4(CayleyWhich::H)})
        for (int s = 2; s <= 4 && ok; ++s)
            ok = ok && orbit_refinement(g, s).classes.size() == 1;
    report(11, "refinements are monotone and see vertex-transitivity", ok, t0);
}

}  // namespace

int main() {
    c1_correspondence();
    c2_generator_identities();
    c3_closure();
    c4_plucking_round_trip();
    c5_noncrossing();
    c6_edge_kills_edgeless_target();
    c7_four_color();
    c8_wl2();
    c9_lovasz_baseline();
    c10_oracles();
    c11_monotone_refinement();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
