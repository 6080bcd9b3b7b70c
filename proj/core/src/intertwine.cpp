#include "blg/intertwine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blg/canonical.hpp"
#include "blg/enumerate.hpp"
#include "blg/planarity.hpp"

namespace blg {

RefinementPartition RefinementPartition::discrete_start(int size) {
    RefinementPartition p;
    p.size = size;
    if (size > 0) {
        std::vector<int> all(size);
        for (int i = 0; i < size; ++i) all[i] = i;
        p.classes.push_back(all);
    }
    return p;
}

void RefinementPartition::refine_by(const std::vector<int>& signature) {
    if (static_cast<int>(signature.size()) != size)
        throw std::invalid_argument("refine_by: signature size mismatch");
    std::vector<std::vector<int>> next;
    for (const auto& cls : classes) {
        std::map<int, std::vector<int>> split;
        for (int x : cls) split[signature[x]].push_back(x);
        for (auto& [sig, part] : split) next.push_back(std::move(part));
    }
    classes = std::move(next);
    normalize();
}

void RefinementPartition::normalize() {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
}

bool RefinementPartition::is_refinement_of(const RefinementPartition& coarser) const {
    if (size != coarser.size) return false;
    std::vector<int> owner(size, -1);
    for (size_t i = 0; i < coarser.classes.size(); ++i)
        for (int x : coarser.classes[i]) owner[x] = static_cast<int>(i);
    for (const auto& cls : classes) {
        if (cls.empty()) continue;
        int o = owner[cls[0]];
        for (int x : cls)
            if (owner[x] != o) return false;
    }
    return true;
}

SpanRank span_rank(const std::vector<RatMatrix>& mats) {
    SpanRank result;
    if (mats.empty()) return result;
    size_t dim = mats[0].e.size();
    std::vector<std::pair<size_t, std::vector<Rational>>> pivots;  // (pivot col, row)
    for (size_t idx = 0; idx < mats.size(); ++idx) {
        if (mats[idx].e.size() != dim || mats[idx].n != mats[0].n || mats[idx].l != mats[0].l ||
            mats[idx].k != mats[0].k)
            throw std::invalid_argument("span_rank: shape mismatch");
        std::vector<Rational> row = mats[idx].e;
        for (const auto& [col, prow] : pivots) {
            if (row[col] == 0) continue;
            Rational f = row[col] / prow[col];
            for (size_t j = 0; j < dim; ++j) row[j] -= f * prow[j];
        }
        size_t col = 0;
        while (col < dim && row[col] == 0) ++col;
        if (col < dim) {
            pivots.push_back({col, std::move(row)});
            ++result.rank;
            result.basis.push_back(static_cast<int>(idx));
        }
    }
    return result;
}

namespace {

bool graph_has_loops(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.has_loop(v)) return true;
    return false;
}

// Rank arbitrary comparable values into small ints for refine_by.
template <typename T>
std::vector<int> ranked(const std::vector<T>& values) {
    std::map<T, int> ids;
    for (const T& v : values) ids.emplace(v, 0);
    int next = 0;
    for (auto& [v, id] : ids) id = next++;
    std::vector<int> out;
    for (const T& v : values) out.push_back(ids[v]);
    return out;
}

}  // namespace

RefinementPartition orbit_refinement(const Graph& g, int size_bound) {
    EnumerateOptions opts;
    opts.allow_loops = graph_has_loops(g);
    opts.filter = [](const Graph& k) { return is_planar(k); };
    RefinementPartition p = RefinementPartition::discrete_start(g.n());
    for (const auto& [k, root] : enumerate_rooted_connected(size_bound, opts)) {
        if (static_cast<int>(p.classes.size()) == g.n()) break;
        std::vector<BigInt> profile = rooted_hom_profile(k, root, g);
        p.refine_by(ranked(profile));
    }
    return p;
}

RefinementPartition orbital_refinement(const Graph& g, int size_bound) {
    EnumerateOptions opts;
    opts.allow_loops = graph_has_loops(g);
    int n = g.n();
    RefinementPartition p = RefinementPartition::discrete_start(n * n);
    for (const Graph& k : enumerate_graphs_up_to(size_bound, opts)) {
        auto auts = automorphisms(k);
        std::vector<char> seen(static_cast<size_t>(k.n()) * k.n(), 0);
        for (int x = 0; x < k.n(); ++x)
            for (int y = 0; y < k.n(); ++y) {
                // orbit representative of the ordered pair under Aut(k)
                int best = x * k.n() + y;
                for (const auto& perm : auts)
                    best = std::min(best, perm[x] * k.n() + perm[y]);
                if (best != x * k.n() + y || seen[best]) continue;
                seen[best] = 1;
                BiLabeledGraph h{k, {x}, {y}};
                if (!in_P(h)) continue;
                HomMatrix t = hom_matrix(h, g);
                std::vector<BigInt> sig;
                sig.reserve(static_cast<size_t>(n) * n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) sig.push_back(t.at(i, j));
                p.refine_by(ranked(sig));
            }
    }
    return p;
}

RefinementPartition wl2(const Graph& g) {
    int n = g.n();
    if (n > 64) throw std::invalid_argument("wl2: vertex bound exceeded");
    std::vector<int> color(static_cast<size_t>(n) * n);
    {
        std::vector<std::tuple<bool, bool, bool, bool>> atoms;
        atoms.reserve(color.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                atoms.push_back({i == j, g.has_edge(i, j), g.has_loop(i), g.has_loop(j)});
        color = ranked(atoms);
    }
    for (;;) {
        std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sigs;
        sigs.reserve(color.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<std::pair<int, int>> around;
                around.reserve(n);
                for (int u = 0; u < n; ++u)
                    around.push_back({color[i * n + u], color[u * n + j]});
                std::sort(around.begin(), around.end());
                sigs.push_back({color[i * n + j], std::move(around)});
            }
        std::vector<int> next = ranked(sigs);
        if (next == color) break;
        color = std::move(next);
    }
    RefinementPartition p;
    p.size = n * n;
    std::map<int, std::vector<int>> by_color;
    for (int idx = 0; idx < n * n; ++idx) by_color[color[idx]].push_back(idx);
    for (auto& [c, cls] : by_color) p.classes.push_back(std::move(cls));
    p.normalize();
    return p;
}

}  // namespace blg
