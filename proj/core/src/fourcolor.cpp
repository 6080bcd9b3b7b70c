#include "blg/fourcolor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

#include "blg/enumerate.hpp"
#include "blg/hommatrix.hpp"
#include "blg/intertwine.hpp"
#include "blg/isotest.hpp"
#include "blg/planarity.hpp"

namespace blg {

std::vector<Perm> s4_elements() {
    Perm p{0, 1, 2, 3};
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r;
    for (int x = 0; x < 4; ++x) r[x] = p[q[x]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r;
    for (int x = 0; x < 4; ++x) r[p[x]] = x;
    return r;
}

int perm_order(const Perm& p) {
    Perm id{0, 1, 2, 3};
    Perm cur = p;
    int ord = 1;
    while (cur != id) {
        cur = perm_compose(cur, p);
        ++ord;
    }
    return ord;
}

namespace {

int cycle_count(const Perm& p) {
    std::array<bool, 4> seen{};
    int c = 0;
    for (int x = 0; x < 4; ++x) {
        if (seen[x]) continue;
        ++c;
        for (int y = x; !seen[y]; y = p[y]) seen[y] = true;
    }
    return c;
}

bool in_connection(const Perm& p, CayleyWhich which) {
    int ord = perm_order(p);
    if (which == CayleyWhich::H) return ord == 2;
    // G: double transpositions (order 2, two 2-cycles) and 4-cycles
    if (ord == 4) return true;
    return ord == 2 && cycle_count(p) == 2;
}

}  // namespace

Graph cayley_s4(CayleyWhich which) {
    auto elems = s4_elements();
    Graph g(static_cast<int>(elems.size()));
    for (size_t u = 0; u < elems.size(); ++u)
        for (size_t v = u + 1; v < elems.size(); ++v)
            if (in_connection(perm_compose(elems[u], perm_inverse(elems[v])), which))
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

std::optional<std::vector<int>> colorability(const Graph& g, int k) {
    int n = g.n();
    if (n == 0) return std::vector<int>{};
    for (int v = 0; v < n; ++v)
        if (g.has_loop(v)) return std::nullopt;
    if (k <= 0) return std::nullopt;

    // Pin a greedily grown clique to distinct colors; sound because colors
    // are interchangeable.
    std::vector<int> clique{0};
    for (int v = 1; v < n; ++v) {
        bool all = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                all = false;
                break;
            }
        if (all) clique.push_back(v);
    }
    if (static_cast<int>(clique.size()) > k) return std::nullopt;

    unsigned full = (k >= 31) ? ~0u : ((1u << k) - 1);
    std::vector<unsigned> domain(n, full);
    std::vector<int> color(n, -1);

    struct Frame {
        int v;
        std::vector<std::pair<int, unsigned>> restored;  // (vertex, old domain)
    };
    std::vector<Frame> trail;

    auto assign = [&](int v, int c) -> bool {
        color[v] = c;
        trail.push_back({v, {}});
        for (int u : g.neighbors(v)) {
            if (u == v || color[u] >= 0) continue;
            unsigned mask = domain[u];
            if (mask & (1u << c)) {
                trail.back().restored.push_back({u, mask});
                domain[u] = mask & ~(1u << c);
                if (domain[u] == 0) return false;
            }
        }
        return true;
    };
    auto undo = [&] {
        Frame& f = trail.back();
        for (auto& [u, mask] : f.restored) domain[u] = mask;
        color[f.v] = -1;
        trail.pop_back();
    };

    for (size_t i = 0; i < clique.size(); ++i)
        if (!assign(clique[i], static_cast<int>(i))) return std::nullopt;

    struct Choice {
        int v;
        unsigned tried;
    };
    std::vector<Choice> stack;
    for (;;) {
        int pick = -1, best = k + 1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int cnt = std::popcount(domain[v]);
            if (cnt < best) {
                best = cnt;
                pick = v;
            }
        }
        if (pick == -1) return color;
        stack.push_back({pick, 0});
        for (;;) {
            Choice& ch = stack.back();
            unsigned avail = domain[ch.v] & ~ch.tried;
            if (avail == 0) {
                stack.pop_back();
                if (stack.empty()) return std::nullopt;
                undo();
                continue;
            }
            int c = std::countr_zero(avail);
            ch.tried |= 1u << c;
            if (assign(ch.v, c)) break;
            undo();
        }
    }
}

int chromatic_number(const Graph& g, int max_k) {
    if (g.n() == 0) return 0;
    for (int k = 1; k <= max_k; ++k)
        if (colorability(g, k)) return k;
    return -1;
}

std::optional<std::vector<int>> hom_exists(const Graph& k, const Graph& g) {
    int n = k.n();
    if (n == 0) return std::vector<int>{};
    if (g.n() == 0) return std::nullopt;

    // Max-back-degree order so edge checks hit assigned vertices early.
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1, best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int u : k.neighbors(v))
                if (u != v && placed[u]) ++back;
            if (back > best) {
                best = back;
                pick = v;
            }
        }
        order.push_back(pick);
        placed[pick] = true;
    }

    std::vector<int> image(n, -1);
    int depth = 0;
    std::vector<int> next(n, 0);
    while (depth >= 0) {
        if (depth == n) return image;
        int v = order[depth];
        bool advanced = false;
        for (int c = next[depth]; c < g.n(); ++c) {
            bool ok = !k.has_loop(v) || g.has_loop(c);
            if (ok)
                for (int u : k.neighbors(v)) {
                    if (u == v || image[u] < 0) continue;
                    if (!g.has_edge(c, image[u])) {
                        ok = false;
                        break;
                    }
                }
            if (ok) {
                image[v] = c;
                next[depth] = c + 1;
                ++depth;
                if (depth < n) next[depth] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            image[v] = -1;
            --depth;
        }
    }
    return std::nullopt;
}

std::vector<int> coset_coloring() {
    // u, v lie in the same right coset of the point stabilizer of 3 exactly
    // when u * v^-1 fixes 3, i.e. when u^-1(3) == v^-1(3).
    auto elems = s4_elements();
    std::vector<int> color;
    color.reserve(elems.size());
    for (const Perm& p : elems) color.push_back(perm_inverse(p)[3]);
    return color;
}

bool FourColorReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

bool translations_are_automorphisms(const Graph& g, CayleyWhich which) {
    auto elems = s4_elements();
    auto find = [&](const Perm& p) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
    };
    for (const Perm& t : elems) {
        std::vector<int> perm(elems.size());
        for (size_t v = 0; v < elems.size(); ++v) perm[v] = find(perm_compose(elems[v], t));
        for (size_t u = 0; u < elems.size(); ++u)
            for (size_t v = u + 1; v < elems.size(); ++v)
                if (g.has_edge(static_cast<int>(u), static_cast<int>(v)) !=
                    g.has_edge(perm[u], perm[v]))
                    return false;
    }
    (void)which;
    return true;
}

bool coloring_proper(const Graph& g, const std::vector<int>& color, int k) {
    for (int c : color)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : g.edges())
        if (u != v && color[u] == color[v]) return false;
    return true;
}

}  // namespace

FourColorReport verify_theorem(int size_bound, int jobs) {
    FourColorReport report;
    report.size_bound = size_bound;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    Graph gc = cayley_s4(CayleyWhich::G);
    Graph hc = cayley_s4(CayleyWhich::H);
    Graph k4 = [] {
        Graph k(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) k.add_edge(i, j);
        return k;
    }();

    add("cayley_order", gc.n() == 24 && hc.n() == 24);
    add("cayley_regular_9", is_regular(gc, 9) && is_regular(hc, 9));
    add("cayley_connected", component_count(gc) == 1 && component_count(hc) == 1);
    add("cayley_vertex_transitive", translations_are_automorphisms(gc, CayleyWhich::G) &&
                                        translations_are_automorphisms(hc, CayleyWhich::H));

    auto coset = coset_coloring();
    add("coset_coloring_proper", coloring_proper(gc, coset, 4));

    auto g_to_k4 = colorability(gc, 4);
    auto k4_to_g = hom_exists(k4, gc);
    add("g_hom_equivalent_k4", g_to_k4.has_value() && k4_to_g.has_value());

    bool h4 = colorability(hc, 4).has_value();
    bool h5 = colorability(hc, 5).has_value();
    add("h_not_4_colorable", !h4);
    add("h_5_colorable", h5);
    add("h_chromatic_5", !h4 && h5);
    add("h_self_hom", hom_exists(hc, hc).has_value());

    // Connected planar loopless corpus up to the bound.
    EnumerateOptions opts;
    opts.connected_only = true;
    opts.filter = [](const Graph& k) { return is_planar(k); };
    std::vector<Graph> corpus = enumerate_graphs_up_to(size_bound, opts);

    struct PerK {
        bool counts_equal = false;
        bool equivalence = false;
    };
    std::vector<PerK> results(corpus.size());
    jobs = std::max(1, jobs);
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (size_t i = w; i < corpus.size(); i += jobs) {
                    const Graph& k = corpus[i];
                    results[i].counts_equal = hom_count_dp(k, gc) == hom_count_dp(k, hc);
                    bool four = colorability(k, 4).has_value();
                    bool to_h = hom_exists(k, hc).has_value();
                    results[i].equivalence = four == to_h;
                }
            });
        for (auto& t : pool) t.join();
    }
    size_t bad_counts = 0, bad_equiv = 0;
    for (const auto& r : results) {
        bad_counts += !r.counts_equal;
        bad_equiv += !r.equivalence;
    }
    {
        std::ostringstream os;
        os << corpus.size() << " graphs, " << bad_counts << " mismatched";
        add("equal_planar_hom_counts", bad_counts == 0, os.str());
    }
    {
        std::ostringstream os;
        os << corpus.size() << " graphs, " << bad_equiv << " violations";
        add("four_colorable_iff_hom_to_h", bad_equiv == 0, os.str());
    }

    add("k4_spot_check",
        colorability(k4, 4).has_value() && hom_exists(k4, hc).has_value());
    {
        Graph c5(5);
        for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
        add("c5_spot_check",
            colorability(c5, 4).has_value() && hom_exists(c5, hc).has_value());
    }

    // 2-WL on the disjoint union must give matching per-copy pair statistics.
    {
        Graph both = disjoint_union(gc, hc);
        RefinementPartition p = wl2(both);
        int n = both.n(), half = gc.n();
        bool same = true;
        for (const auto& cls : p.classes) {
            long in1 = 0, in2 = 0;
            for (int idx : cls) {
                int i = idx / n, j = idx % n;
                if (i < half && j < half) ++in1;
                if (i >= half && j >= half) ++in2;
            }
            if (in1 != in2) {
                same = false;
                break;
            }
        }
        add("wl2_does_not_separate", same);
    }

    return report;
}

}  // namespace blg
