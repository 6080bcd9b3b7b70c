#pragma once

#include <optional>

#include "blg/graph.hpp"
#include "blg/hommatrix.hpp"

namespace blg {

struct DistinguishResult {
    bool distinguished = false;
    std::optional<Graph> witness;  // first corpus member with differing counts
    BigInt count1 = 0;
    BigInt count2 = 0;
    long corpus_size = 0;
};

// Homomorphism-count isomorphism test: counts from all connected graphs with
// up to max(|V1|, |V2|) vertices decide isomorphism. Intended for small
// inputs (at most 5 vertices each).
DistinguishResult lovasz_iso(const Graph& g1, const Graph& g2);

// Counts from connected (optionally planar-only) graphs with at most
// `size_bound` vertices, in deterministic corpus order: vertex count, then
// edge count, then canonical certificate.
DistinguishResult planar_distinguish(const Graph& g1, const Graph& g2, int size_bound,
                                     bool planar_only = true, int jobs = 1);

bool components_check(const Graph& g1, const Graph& g2);

// The two inclusion-exclusion identities tying homomorphism counts of a
// graph, its edge deletion, its edge contraction, and the contraction with a
// loop added; each formula value is paired with a directly enumerated count.
struct ComplementIdentity {
    BigInt formula_distinct_or_looped = 0;
    BigInt direct_distinct_or_looped = 0;
    BigInt formula_nonadjacent = 0;
    BigInt direct_nonadjacent = 0;
    bool ok = false;
};
ComplementIdentity complement_identity(const Graph& k, int u, int v, const Graph& x);

}  // namespace blg
