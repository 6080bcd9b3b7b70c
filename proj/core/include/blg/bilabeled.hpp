#pragma once

#include <string>
#include <vector>

#include "blg/graph.hpp"

namespace blg {

// Graph with an output tuple `out` (length l) and an input tuple `in`
// (length k); entries are vertices, repetition allowed.
struct BiLabeledGraph {
    Graph graph;
    std::vector<int> out;
    std::vector<int> in;

    int l() const { return static_cast<int>(out.size()); }
    int k() const { return static_cast<int>(in.size()); }
    void validate() const;  // throws if a tuple entry is out of range
};

// h1 has input arity equal to h2's output arity; glue h1's inputs onto h2's
// outputs pairwise, contract the glue edges, simplify keeping loops.
BiLabeledGraph compose(const BiLabeledGraph& h1, const BiLabeledGraph& h2);

// Disjoint union with concatenated tuples.
BiLabeledGraph tensor(const BiLabeledGraph& h1, const BiLabeledGraph& h2);

// Swap the two tuples.
BiLabeledGraph transpose(const BiLabeledGraph& h);

// Same arities on both sides; glue outputs with outputs and inputs with
// inputs pairwise, contract, simplify keeping loops.
BiLabeledGraph schur(const BiLabeledGraph& h1, const BiLabeledGraph& h2);

// Standard pieces.
BiLabeledGraph gen_M(int l, int k);       // one loopless vertex repeated in both tuples
BiLabeledGraph gen_M_looped(int l, int k);  // same with a loop
BiLabeledGraph gen_A();                   // single edge, out=(u), in=(v)
BiLabeledGraph gen_S();                   // two isolated vertices, out=(a,b), in=(b,a)
BiLabeledGraph gen_I();                   // single vertex, out=(v), in=(v)
BiLabeledGraph identity_tensor(int r);    // r-fold tensor power of gen_I (r >= 0)

// Stars: a centre of degree d with leaves v_1..v_d; out repeats the centre m
// times. Variants differ in the input tuple:
//   plain: (v_1..v_d);  left: (centre, v_1..v_d);  right: (v_1..v_d, centre).
enum class StarVariant { plain, left, right };
BiLabeledGraph gen_star(int m, int d, StarVariant variant = StarVariant::plain,
                        bool looped = false);

// Isomorphism of bi-labeled graphs: an underlying isomorphism carrying the
// tuples entrywise. Certificates agree iff isomorphic.
std::string blg_certificate(const BiLabeledGraph& h);
bool blg_isomorphic(const BiLabeledGraph& h1, const BiLabeledGraph& h2);

}  // namespace blg
