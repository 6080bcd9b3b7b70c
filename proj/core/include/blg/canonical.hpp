#pragma once

#include <string>
#include <vector>

#include "blg/graph.hpp"

namespace blg {

// Canonical labeling by colour refinement plus individualisation search.
// `labeling[v]` is the canonical position of vertex v; `certificate` is a
// byte string that is equal for two graphs iff they are isomorphic.
struct CanonicalForm {
    std::vector<int> labeling;
    std::string certificate;
};

// `colors`, when given, must be an isomorphism-invariant vertex colouring;
// it is folded into the certificate (used for rooted/tuple-decorated forms).
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {});

// All automorphisms as permutations (perm[v] = image of v).
std::vector<std::vector<int>> automorphisms(const Graph& g, const std::vector<int>& colors = {});

std::vector<std::vector<int>> vertex_orbits(const Graph& g, const std::vector<int>& colors = {});

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace blg
