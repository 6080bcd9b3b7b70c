#pragma once

#include <string>
#include <vector>

#include "blg/bilabeled.hpp"
#include "blg/hommatrix.hpp"

namespace blg {

// Expression over the leaves M10 (vertex with one output), M12 (vertex with
// one output and two inputs), A (single edge), S (wire swap), combined by
// composition, tensor and transpose. Arities are validated on construction.
struct GeneratorExpression {
    enum Kind { M10, M12, A, S, Compose, Tensor, Transpose };
    Kind kind = M10;
    std::vector<GeneratorExpression> children;
    int l = 0;
    int k = 0;
};

GeneratorExpression expr_leaf(GeneratorExpression::Kind kind);
GeneratorExpression expr_compose(GeneratorExpression a, GeneratorExpression b);
GeneratorExpression expr_tensor(GeneratorExpression a, GeneratorExpression b);
GeneratorExpression expr_transpose(GeneratorExpression a);

BiLabeledGraph eval_blg(const GeneratorExpression& e);
// Structural evaluation against a target: leaves become explicit matrices,
// operations become matrix operations. Independent of eval_blg + hom_matrix.
HomMatrix eval_matrix(const GeneratorExpression& e, const Graph& g);

// Text form over tokens {M10, M12, A, S, o, x, t}; "t" is prefix transpose,
// "x" binds tighter than "o", parentheses group.
std::string format_expression(const GeneratorExpression& e);
GeneratorExpression parse_expression(const std::string& text);

// Derived pieces, each provably equal to its direct construction.
GeneratorExpression expr_identity();                       // M12 o t(M12)
GeneratorExpression expr_identity_tensor(int r);           // r >= 1
GeneratorExpression expr_M(int l, int k);
GeneratorExpression expr_M_looped(int l, int k);
GeneratorExpression expr_star(int m, int d, StarVariant variant, bool looped);

// One plucking step: detach a vertex whose tuple occurrences are consecutive
// around the envelope, leaving a wrapper (star/identity tensor) composed
// with a smaller member `rest`. Case numbering:
//   0: no tuple points at all;  1: occurrences inside the output tuple;
//   2: inside the input tuple;  3: a prefix of both tuples;
//   4: a suffix of both tuples.
struct PluckStep {
    int case_id = -1;
    bool looped = false;
    int m = 0;  // occurrence count of the plucked vertex
    int d = 0;  // its degree towards the rest
    int r = 0;  // leading identity wires (cases 1,2) / input occurrences (3,4)
    int t = 0;  // trailing identity wires
    BiLabeledGraph rest;
};

// Requires in_P(h) and at least two vertices.
PluckStep pluck(const BiLabeledGraph& h);
// Rebuild the composition described by a step; isomorphic to the input of
// pluck for every valid step.
BiLabeledGraph reconstruct(const PluckStep& step);

// Full recursive decomposition of a member of the planar class into an
// expression over {M10, M12, A}.
GeneratorExpression decompose(const BiLabeledGraph& h);

}  // namespace blg
