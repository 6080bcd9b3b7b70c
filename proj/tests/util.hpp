#pragma once

#include <random>

#include "blg/bilabeled.hpp"
#include "blg/graph.hpp"

namespace blg::testutil {

inline Graph random_graph(std::mt19937_64& rng, int n, double p, bool loops = false) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + (loops ? 0 : 1); v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline BiLabeledGraph random_blg(std::mt19937_64& rng, int n_max, int l, int k, double p,
                                 bool loops = false) {
    std::uniform_int_distribution<int> nd(1, n_max);
    int n = nd(rng);
    BiLabeledGraph h;
    h.graph = random_graph(rng, n, p, loops);
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int i = 0; i < l; ++i) h.out.push_back(vd(rng));
    for (int i = 0; i < k; ++i) h.in.push_back(vd(rng));
    return h;
}

}  // namespace blg::testutil
