#include "blg/hommatrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace blg {

RatMatrix to_rational(const HomMatrix& a) {
    RatMatrix r(a.n, a.l, a.k);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = Rational(a.e[i]);
    return r;
}

RatMatrix mat_scale(const RatMatrix& a, const Rational& c) {
    RatMatrix r = a;
    for (auto& x : r.e) x *= c;
    return r;
}

namespace {

// Static order maximising back-edges: repeatedly take the unplaced vertex
// with the most already-placed neighbours.
std::vector<int> search_order(const Graph& k) {
    int n = k.n();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_back = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int u : k.neighbors(v))
                if (placed[u]) ++back;
            if (back > best_back) {
                best = v;
                best_back = back;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

template <typename Visit>
void enumerate_homs(const Graph& k, const Graph& g, Visit&& visit) {
    int nk = k.n(), ng = g.n();
    if (nk == 0) {
        visit(std::vector<int>{});
        return;
    }
    std::vector<int> order = search_order(k);
    std::vector<std::vector<int>> back(nk);  // earlier-placed neighbours per step
    std::vector<char> placed(k.n(), 0);
    for (int s = 0; s < nk; ++s) {
        for (int u : k.neighbors(order[s]))
            if (placed[u]) back[s].push_back(u);
        placed[order[s]] = 1;
    }
    std::vector<int> phi(nk, -1);
    std::vector<int> val(nk, -1);
    int depth = 0;
    while (depth >= 0) {
        int v = order[depth];
        int next = val[depth] + 1;
        bool advanced = false;
        for (int cand = next; cand < ng; ++cand) {
            bool ok = !k.has_loop(v) || g.has_loop(cand);
            if (ok)
                for (int u : back[depth])
                    if (!g.has_edge(cand, phi[u])) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            val[depth] = cand;
            phi[v] = cand;
            advanced = true;
            break;
        }
        if (!advanced) {
            val[depth] = -1;
            phi[v] = -1;
            --depth;
            continue;
        }
        if (depth + 1 == nk) {
            visit(phi);
        } else {
            ++depth;
        }
    }
}

}  // namespace

BigInt hom_count(const Graph& k, const Graph& g) {
    BigInt total = 0;
    enumerate_homs(k, g, [&](const std::vector<int>&) { ++total; });
    return total;
}

HomMatrix hom_matrix(const BiLabeledGraph& h, const Graph& g) {
    h.validate();
    HomMatrix m(g.n(), h.l(), h.k());
    if (g.n() == 0) return m;
    enumerate_homs(h.graph, g, [&](const std::vector<int>& phi) {
        long long row = 0, col = 0;
        for (int v : h.out) row = row * g.n() + phi[v];
        for (int v : h.in) col = col * g.n() + phi[v];
        ++m.at(row, col);
    });
    return m;
}

int TreeDecomposition::width() const {
    int w = 0;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w - 1;
}

void TreeDecomposition::validate(const Graph& g) const {
    int nb = static_cast<int>(bags.size());
    std::vector<std::vector<int>> tree(nb);
    for (auto [a, b] : edges) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    if (nb > 0 && static_cast<int>(edges.size()) != nb - 1)
        throw std::invalid_argument("tree decomposition: not a tree");
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holding;
        for (int t = 0; t < nb; ++t)
            if (std::count(bags[t].begin(), bags[t].end(), v)) holding.push_back(t);
        if (holding.empty()) throw std::invalid_argument("tree decomposition: vertex uncovered");
        // occurrence set must be connected in the tree
        std::set<int> seen{holding[0]};
        std::vector<int> stack{holding[0]};
        std::set<int> hold_set(holding.begin(), holding.end());
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s : tree[t])
                if (hold_set.count(s) && !seen.count(s)) {
                    seen.insert(s);
                    stack.push_back(s);
                }
        }
        if (seen.size() != hold_set.size())
            throw std::invalid_argument("tree decomposition: occurrence subtree disconnected");
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : bags)
            if (std::count(b.begin(), b.end(), u) && std::count(b.begin(), b.end(), v)) {
                covered = true;
                break;
            }
        if (!covered) throw std::invalid_argument("tree decomposition: edge uncovered");
    }
}

TreeDecomposition tree_decomposition_minfill(const Graph& g) {
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges())
        if (u != v) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    std::vector<char> gone(n, 0);
    std::vector<int> elim_order;
    std::vector<std::vector<int>> elim_nbrs;  // neighbourhood at elimination time
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long fill = 0;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!adj[nb[i]].count(nb[j])) ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        elim_order.push_back(best);
        elim_nbrs.push_back(nb);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (int u : nb) adj[u].erase(best);
        adj[best].clear();
        gone[best] = 1;
    }
    // Rebuild in reverse elimination order; each eliminated vertex's
    // neighbourhood is a clique among later vertices, so some existing bag
    // contains it and can serve as the attachment point.
    for (int i = n - 1; i >= 0; --i) {
        std::vector<int> bag{elim_order[i]};
        for (int u : elim_nbrs[i]) bag.push_back(u);
        std::sort(bag.begin(), bag.end());
        int idx = static_cast<int>(td.bags.size());
        td.bags.push_back(bag);
        if (idx == 0) continue;
        int attach = 0;
        for (int j = 0; j < idx; ++j) {
            bool contains = true;
            for (int u : elim_nbrs[i])
                if (!std::count(td.bags[j].begin(), td.bags[j].end(), u)) {
                    contains = false;
                    break;
                }
            if (contains) {
                attach = j;
                break;
            }
        }
        td.edges.push_back({idx, attach});
    }
    td.validate(g);
    return td;
}

namespace {

struct DpContext {
    const Graph& k;
    const Graph& g;
    const std::map<int, int>& pins;
    const TreeDecomposition& td;
    std::vector<std::vector<int>> children;
};

// Table over assignments of bag vertices; index is mixed radix base n_g with
// bag[0] most significant.
std::vector<BigInt> dp_table(const DpContext& ctx, int t);

std::vector<BigInt> dp_table(const DpContext& ctx, int t) {
    const auto& bag = ctx.td.bags[t];
    int ng = ctx.g.n();
    int bs = static_cast<int>(bag.size());
    long long size = 1;
    for (int i = 0; i < bs; ++i) size *= ng;

    struct ChildInfo {
        std::vector<BigInt> projected;  // indexed by assignment of shared vertices
        std::vector<int> shared_pos;    // positions of shared vertices inside this bag
    };
    std::vector<ChildInfo> infos;
    for (int c : ctx.children[t]) {
        std::vector<BigInt> child = dp_table(ctx, c);
        const auto& cbag = ctx.td.bags[c];
        std::vector<int> shared, shared_pos_in_child, shared_pos_in_t;
        for (size_t i = 0; i < cbag.size(); ++i) {
            auto it = std::find(bag.begin(), bag.end(), cbag[i]);
            if (it != bag.end()) {
                shared.push_back(cbag[i]);
                shared_pos_in_child.push_back(static_cast<int>(i));
                shared_pos_in_t.push_back(static_cast<int>(it - bag.begin()));
            }
        }
        long long shared_size = 1;
        for (size_t i = 0; i < shared.size(); ++i) shared_size *= ng;
        std::vector<BigInt> proj(shared_size);
        std::vector<int> assign(cbag.size(), 0);
        for (long long idx = 0; idx < static_cast<long long>(child.size()); ++idx) {
            if (child[idx] != 0) {
                long long rem = idx;
                for (int i = static_cast<int>(cbag.size()) - 1; i >= 0; --i) {
                    assign[i] = static_cast<int>(rem % ng);
                    rem /= ng;
                }
                long long sidx = 0;
                for (int p : shared_pos_in_child) sidx = sidx * ng + assign[p];
                proj[sidx] += child[idx];
            }
        }
        infos.push_back({std::move(proj), shared_pos_in_t});
    }

    std::vector<BigInt> table(size);
    std::vector<int> assign(bs, 0);
    for (long long idx = 0; idx < size; ++idx) {
        long long rem = idx;
        for (int i = bs - 1; i >= 0; --i) {
            assign[i] = static_cast<int>(rem % ng);
            rem /= ng;
        }
        bool ok = true;
        for (int i = 0; i < bs && ok; ++i) {
            auto pin = ctx.pins.find(bag[i]);
            if (pin != ctx.pins.end() && pin->second != assign[i]) ok = false;
        }
        for (int i = 0; i < bs && ok; ++i) {
            if (ctx.k.has_loop(bag[i]) && !ctx.g.has_loop(assign[i])) ok = false;
            for (int j = i + 1; j < bs && ok; ++j)
                if (ctx.k.has_edge(bag[i], bag[j]) && !ctx.g.has_edge(assign[i], assign[j]))
                    ok = false;
        }
        if (!ok) continue;
        BigInt value = 1;
        for (const auto& info : infos) {
            long long sidx = 0;
            for (int p : info.shared_pos) sidx = sidx * ng + assign[p];
            value *= info.projected[sidx];
            if (value == 0) break;
        }
        table[idx] = std::move(value);
    }
    return table;
}

}  // namespace

BigInt hom_count_dp(const Graph& k, const Graph& g, const std::map<int, int>& pins) {
    for (auto [v, img] : pins)
        if (v < 0 || v >= k.n() || img < 0 || img >= g.n())
            throw std::invalid_argument("hom_count_dp: pin out of range");
    if (k.n() == 0) return 1;
    if (g.n() == 0) return 0;
    TreeDecomposition td = tree_decomposition_minfill(k);
    // root the tree at bag 0
    int nb = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> tree(nb);
    for (auto [a, b] : td.edges) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    DpContext ctx{k, g, pins, td, std::vector<std::vector<int>>(nb)};
    std::vector<int> parent(nb, -1), order, stack{0};
    std::vector<char> seen(nb, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : tree[t])
            if (!seen[s]) {
                seen[s] = 1;
                ctx.children[t].push_back(s);
                stack.push_back(s);
            }
    }
    std::vector<BigInt> root = dp_table(ctx, 0);
    BigInt total = 0;
    for (const BigInt& x : root) total += x;
    return total;
}

std::vector<BigInt> rooted_hom_profile(const Graph& k, int root, const Graph& g) {
    std::vector<BigInt> out;
    for (int u = 0; u < g.n(); ++u) out.push_back(hom_count_dp(k, g, {{root, u}}));
    return out;
}

}  // namespace blg
