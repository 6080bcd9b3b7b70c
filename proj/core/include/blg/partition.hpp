#pragma once

#include <vector>

#include "blg/bilabeled.hpp"

namespace blg {

// Set partition of l lower and k upper points, plus a count of empty parts.
// Points are linearly ordered as a_1 < ... < a_l < b_k < ... < b_1 and are
// indexed 0..l+k-1 along that order (index p < l is a_{p+1}, index p >= l is
// b_{l+k-p}).
struct LabeledPartition {
    int l = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks;  // sorted blocks of sorted points
    int empty_parts = 0;

    int points() const { return l + k; }
    void validate() const;
    void normalize();  // sort points within blocks, blocks by first point
    bool operator==(const LabeledPartition& o) const;
};

// Crossing test on the linear point order.
bool is_noncrossing(const LabeledPartition& p);

// Edgeless bi-labeled graph with one vertex per block (in block order) and
// one isolated vertex per empty part.
BiLabeledGraph partition_to_blg(const LabeledPartition& p);

// Inverse direction for an arbitrary bi-labeled graph: group tuple points by
// the vertex they sit on; vertices missing from both tuples become empty
// parts. (Edges of the graph are ignored.)
LabeledPartition blg_to_partition(const BiLabeledGraph& h);

LabeledPartition compose(const LabeledPartition& p1, const LabeledPartition& p2);
LabeledPartition tensor(const LabeledPartition& p1, const LabeledPartition& p2);
LabeledPartition transpose(const LabeledPartition& p);

// All partitions of the points of shape (l,k) with no empty parts.
std::vector<LabeledPartition> enumerate_partitions(int l, int k);

}  // namespace blg
