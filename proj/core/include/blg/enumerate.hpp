#pragma once

#include <functional>
#include <vector>

#include "blg/graph.hpp"

namespace blg {

struct EnumerateOptions {
    bool allow_loops = false;
    bool connected_only = false;
    // Optional extra filter (e.g. planarity); applied after isomorphism dedup.
    std::function<bool(const Graph&)> filter;
};

// One representative per isomorphism class on exactly n vertices, built by
// vertex augmentation with certificate dedup. Deterministic order:
// (edge count, canonical certificate).
std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& opts = {});

// All classes with 1..n_max vertices, concatenated by vertex count.
std::vector<Graph> enumerate_graphs_up_to(int n_max, const EnumerateOptions& opts = {});

// Rooted connected graphs (g, root) with one representative per rooted
// isomorphism class; roots are deduplicated by vertex orbit.
std::vector<std::pair<Graph, int>> enumerate_rooted_connected(int n_max,
                                                              const EnumerateOptions& opts = {});

}  // namespace blg
