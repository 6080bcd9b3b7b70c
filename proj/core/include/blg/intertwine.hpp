#pragma once

#include <vector>

#include "blg/graph.hpp"
#include "blg/hommatrix.hpp"

namespace blg {

// Partition of a ground set 0..size-1 into sorted classes.
struct RefinementPartition {
    int size = 0;
    std::vector<std::vector<int>> classes;

    static RefinementPartition discrete_start(int size);  // one class holding everything
    void refine_by(const std::vector<int>& signature);    // split classes by signature value
    bool is_refinement_of(const RefinementPartition& coarser) const;
    void normalize();
};

// Rank of the span of a list of equally-shaped matrices, by exact rational
// elimination; also reports indices of a maximal independent subset.
struct SpanRank {
    int rank = 0;
    std::vector<int> basis;
};
SpanRank span_rank(const std::vector<RatMatrix>& mats);

// Vertex partition from counts of rooted homomorphisms: generators are all
// rooted connected planar graphs with at most `size_bound` vertices (loops
// allowed only when the target has loops), one per rooted isomorphism class.
RefinementPartition orbit_refinement(const Graph& g, int size_bound);

// Partition of ordered vertex pairs by the matrices of all members of the
// planar class with one output and one input and at most `size_bound`
// underlying vertices. Pair (i,j) is indexed i * n + j.
RefinementPartition orbital_refinement(const Graph& g, int size_bound);

// Two-dimensional Weisfeiler-Leman over ordered pairs; returns the stable
// partition of V x V (same index convention as orbital_refinement).
RefinementPartition wl2(const Graph& g);

}  // namespace blg
