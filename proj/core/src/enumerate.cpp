#include "blg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blg/canonical.hpp"

namespace blg {

namespace {

// Representatives on exactly n vertices, no filtering beyond loop policy.
std::vector<Graph> all_classes(int n, bool allow_loops) {
    static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
    auto key = std::make_pair(n, allow_loops);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Graph> result;
    if (n == 0) {
        result.push_back(Graph(0));
    } else {
        std::vector<Graph> smaller = all_classes(n - 1, allow_loops);
        std::set<std::string> seen;
        for (const Graph& base : smaller) {
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                for (int loop = 0; loop <= (allow_loops ? 1 : 0); ++loop) {
                    Graph g(n);
                    for (auto [u, v] : base.edges()) g.add_edge(u, v);
                    for (int u = 0; u < n - 1; ++u)
                        if (mask & (1 << u)) g.add_edge(u, n - 1);
                    if (loop) g.add_edge(n - 1, n - 1);
                    std::string cert = canonical_form(g).certificate;
                    if (seen.insert(cert).second) result.push_back(g);
                }
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const Graph& a, const Graph& b) {
        int ea = a.edge_count(), eb = b.edge_count();
        if (ea != eb) return ea < eb;
        return canonical_form(a).certificate < canonical_form(b).certificate;
    });
    cache[key] = result;
    return result;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& opts) {
    std::vector<Graph> out;
    for (const Graph& g : all_classes(n, opts.allow_loops)) {
        if (opts.connected_only && !is_connected(g)) continue;
        if (opts.filter && !opts.filter(g)) continue;
        out.push_back(g);
    }
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(int n_max, const EnumerateOptions& opts) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto part = enumerate_graphs(n, opts);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::pair<Graph, int>> enumerate_rooted_connected(int n_max,
                                                              const EnumerateOptions& opts) {
    EnumerateOptions o = opts;
    o.connected_only = true;
    std::vector<std::pair<Graph, int>> out;
    for (const Graph& g : enumerate_graphs_up_to(n_max, o))
        for (const auto& orbit : vertex_orbits(g)) out.push_back({g, orbit.front()});
    return out;
}

}  // namespace blg
