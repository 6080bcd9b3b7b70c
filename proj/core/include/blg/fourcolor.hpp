#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "blg/graph.hpp"

namespace blg {

// Permutations of {0,1,2,3} stored as image tuples.
using Perm = std::array<int, 4>;

std::vector<Perm> s4_elements();  // all 24, sorted
Perm perm_compose(const Perm& p, const Perm& q);  // x -> p[q[x]]
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);

enum class CayleyWhich {
    H,  // connection set: all order-two elements (9 involutions)
    G,  // connection set: double transpositions and 4-cycles
};

// 24-vertex Cayley graph on S4; u ~ v iff u * v^-1 is in the connection set.
// Vertex i is s4_elements()[i].
Graph cayley_s4(CayleyWhich which);

// Proper k-coloring by backtracking with forward checking, or nullopt after
// verified exhaustion. Any loop makes the instance unsat.
std::optional<std::vector<int>> colorability(const Graph& g, int k);
int chromatic_number(const Graph& g, int max_k = 8);

// Homomorphism witness k -> g, or nullopt.
std::optional<std::vector<int>> hom_exists(const Graph& k, const Graph& g);

// 4-coloring of cayley_s4(G) by right cosets of the subgroup fixing point 3.
std::vector<int> coset_coloring();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FourColorReport {
    int size_bound = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Full desk-scale pipeline: Cayley builders and their structural facts,
// hom-equivalence of the G graph with K4, chromatic number 5 of the H graph,
// equal planar hom counts up to `size_bound` vertices, the per-graph
// "4-colorable iff maps to H" equivalence over the same corpus, and 2-WL
// non-separation of the pair.
FourColorReport verify_theorem(int size_bound = 5, int jobs = 1);

}  // namespace blg
