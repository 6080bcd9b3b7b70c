#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blg/bilabeled.hpp"
#include "blg/graph.hpp"

namespace blg {

struct PlanarityResult {
    bool planar = false;
    // On failure: edges of a subdivision of K5 or K3,3 inside the input.
    std::vector<std::pair<int, int>> witness;
};

PlanarityResult check_planar(const Graph& g);
bool is_planar(const Graph& g);
bool is_planar(const Multigraph& g);  // parallel edges and loops ignored

// Combinatorial embedding of a planar graph: for each vertex the cyclic
// order of its neighbours. Loops are dropped; input must be planar.
std::vector<std::vector<int>> rotation_system(const Graph& g);

// The enveloped forms of a bi-labeled graph: `enveloped` rings the tuple
// points with a cycle of fresh vertices, `apexed` additionally joins a fresh
// apex to every cycle vertex. With no tuple points both equal the graph.
// One tuple point yields a looped cycle vertex, two yield a doubled edge.
struct Envelope {
    Multigraph enveloped;
    Multigraph apexed;
    std::vector<int> cycle;  // cycle vertices in ring order
    int apex = -1;           // -1 when there is no apex (no tuple points)
};

Envelope build_envelope(const BiLabeledGraph& h);

// Membership in the planar class: the apexed envelope is planar.
bool in_P(const BiLabeledGraph& h);

// True iff `cycle` (a cycle of g given as a vertex list; a single looped
// vertex is allowed) bounds a face in some planar embedding.
bool is_facial_cycle(const Graph& g, const std::vector<int>& cycle);

// True iff all of `vertices` lie on one face in some planar embedding.
bool common_face(const Graph& g, const std::vector<int>& vertices);

}  // namespace blg
