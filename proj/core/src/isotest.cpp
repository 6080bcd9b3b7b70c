#include "blg/isotest.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "blg/bilabeled.hpp"
#include "blg/enumerate.hpp"
#include "blg/planarity.hpp"

namespace blg {

namespace {
bool graph_has_loops(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.has_loop(v)) return true;
    return false;
}

DistinguishResult run_corpus(const std::vector<Graph>& corpus, const Graph& g1, const Graph& g2,
                             int jobs) {
    DistinguishResult r;
    r.corpus_size = static_cast<long>(corpus.size());
    jobs = std::max(1, jobs);
    size_t block = static_cast<size_t>(jobs) * 4;
    for (size_t start = 0; start < corpus.size(); start += block) {
        size_t end = std::min(corpus.size(), start + block);
        std::vector<std::pair<BigInt, BigInt>> counts(end - start);
        if (jobs == 1) {
            for (size_t i = start; i < end; ++i)
                counts[i - start] = {hom_count_dp(corpus[i], g1), hom_count_dp(corpus[i], g2)};
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w)
                pool.emplace_back([&, w] {
                    for (size_t i = start + w; i < end; i += jobs)
                        counts[i - start] = {hom_count_dp(corpus[i], g1),
                                             hom_count_dp(corpus[i], g2)};
                });
            for (auto& t : pool) t.join();
        }
        for (size_t i = start; i < end; ++i) {
            if (counts[i - start].first != counts[i - start].second) {
                r.distinguished = true;
                r.witness = corpus[i];
                r.count1 = counts[i - start].first;
                r.count2 = counts[i - start].second;
                return r;
            }
        }
    }
    return r;
}
}  // namespace

DistinguishResult lovasz_iso(const Graph& g1, const Graph& g2) {
    EnumerateOptions opts;
    opts.allow_loops = graph_has_loops(g1) || graph_has_loops(g2);
    opts.connected_only = true;
    int bound = std::max(g1.n(), g2.n());
    return run_corpus(enumerate_graphs_up_to(bound, opts), g1, g2, 1);
}

DistinguishResult planar_distinguish(const Graph& g1, const Graph& g2, int size_bound,
                                     bool planar_only, int jobs) {
    EnumerateOptions opts;
    opts.allow_loops = graph_has_loops(g1) || graph_has_loops(g2);
    opts.connected_only = true;
    if (planar_only)
        opts.filter = [](const Graph& k) { return is_planar(k); };
    return run_corpus(enumerate_graphs_up_to(size_bound, opts), g1, g2, jobs);
}

bool components_check(const Graph& g1, const Graph& g2) {
    return component_count(g1) == component_count(g2);
}

ComplementIdentity complement_identity(const Graph& k, int u, int v, const Graph& x) {
    if (u == v || !k.has_edge(u, v))
        throw std::invalid_argument("complement_identity: need a plain edge of k");
    Graph deleted = delete_edge(k, u, v);
    Graph contracted = contract_edge(k, u, v);
    Graph contracted_loop = contracted;
    int merged = std::min(u, v);
    contracted_loop.add_edge(merged, merged);

    ComplementIdentity r;
    r.formula_nonadjacent = hom_count(deleted, x) - hom_count(k, x);
    r.formula_distinct_or_looped = hom_count(deleted, x) - hom_count(k, x) -
                                   hom_count(contracted, x) + 2 * hom_count(contracted_loop, x);

    // direct route: bin the homomorphisms of the deleted graph by the images
    // of the two endpoints
    HomMatrix t = hom_matrix({deleted, {u}, {v}}, x);
    for (int a = 0; a < x.n(); ++a)
        for (int b = 0; b < x.n(); ++b) {
            if (!x.has_edge(a, b)) r.direct_nonadjacent += t.at(a, b);
            if (a != b && !x.has_edge(a, b)) r.direct_distinct_or_looped += t.at(a, b);
            if (a == b && x.has_loop(a)) r.direct_distinct_or_looped += t.at(a, b);
        }
    r.ok = r.formula_nonadjacent == r.direct_nonadjacent &&
           r.formula_distinct_or_looped == r.direct_distinct_or_looped;
    return r;
}

}  // namespace blg
