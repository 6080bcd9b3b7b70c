#include "blg/bilabeled.hpp"

#include <stdexcept>

#include "blg/canonical.hpp"

namespace blg {

void BiLabeledGraph::validate() const {
    for (int v : out)
        if (v < 0 || v >= graph.n()) throw std::invalid_argument("output tuple out of range");
    for (int v : in)
        if (v < 0 || v >= graph.n()) throw std::invalid_argument("input tuple out of range");
}

namespace {

BiLabeledGraph glue(const BiLabeledGraph& h1, const BiLabeledGraph& h2,
                    const std::vector<std::pair<int, int>>& pairs,
                    const std::vector<int>& new_out_old, const std::vector<int>& new_in_old) {
    // pairs are (vertex of h1, vertex of h2); tuple templates are in the
    // combined numbering (h2 shifted by h1.graph.n()).
    Multigraph m(h1.graph.n() + h2.graph.n());
    for (auto [u, v] : h1.graph.edges()) m.add_edge(u, v);
    for (auto [u, v] : h2.graph.edges()) m.add_edge(h1.graph.n() + u, h1.graph.n() + v);
    std::vector<int> glue_ids;
    for (auto [u, v] : pairs) {
        glue_ids.push_back(static_cast<int>(m.edges().size()));
        m.add_edge(u, h1.graph.n() + v);
    }
    auto [g, map] = contract_and_simplify(m, glue_ids);
    BiLabeledGraph r;
    r.graph = g;
    for (int v : new_out_old) r.out.push_back(map[v]);
    for (int v : new_in_old) r.in.push_back(map[v]);
    return r;
}

}  // namespace

BiLabeledGraph compose(const BiLabeledGraph& h1, const BiLabeledGraph& h2) {
    if (h1.k() != h2.l()) throw std::invalid_argument("compose: arity mismatch");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < h1.k(); ++i) pairs.push_back({h1.in[i], h2.out[i]});
    std::vector<int> out_old = h1.out;
    std::vector<int> in_old;
    for (int v : h2.in) in_old.push_back(h1.graph.n() + v);
    return glue(h1, h2, pairs, out_old, in_old);
}

BiLabeledGraph tensor(const BiLabeledGraph& h1, const BiLabeledGraph& h2) {
    BiLabeledGraph r;
    r.graph = disjoint_union(h1.graph, h2.graph);
    r.out = h1.out;
    for (int v : h2.out) r.out.push_back(h1.graph.n() + v);
    r.in = h1.in;
    for (int v : h2.in) r.in.push_back(h1.graph.n() + v);
    return r;
}

BiLabeledGraph transpose(const BiLabeledGraph& h) { return {h.graph, h.in, h.out}; }

BiLabeledGraph schur(const BiLabeledGraph& h1, const BiLabeledGraph& h2) {
    if (h1.l() != h2.l() || h1.k() != h2.k())
        throw std::invalid_argument("schur: arity mismatch");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < h1.l(); ++i) pairs.push_back({h1.out[i], h2.out[i]});
    for (int i = 0; i < h1.k(); ++i) pairs.push_back({h1.in[i], h2.in[i]});
    return glue(h1, h2, pairs, h1.out, h1.in);
}

BiLabeledGraph gen_M(int l, int k) {
    BiLabeledGraph h;
    h.graph = Graph(1);
    h.out.assign(l, 0);
    h.in.assign(k, 0);
    return h;
}

BiLabeledGraph gen_M_looped(int l, int k) {
    BiLabeledGraph h = gen_M(l, k);
    h.graph.add_edge(0, 0);
    return h;
}

BiLabeledGraph gen_A() {
    BiLabeledGraph h;
    h.graph = Graph(2);
    h.graph.add_edge(0, 1);
    h.out = {0};
    h.in = {1};
    return h;
}

BiLabeledGraph gen_S() {
    BiLabeledGraph h;
    h.graph = Graph(2);
    h.out = {0, 1};
    h.in = {1, 0};
    return h;
}

BiLabeledGraph gen_I() {
    BiLabeledGraph h;
    h.graph = Graph(1);
    h.out = {0};
    h.in = {0};
    return h;
}

BiLabeledGraph identity_tensor(int r) {
    BiLabeledGraph h;
    h.graph = Graph(r);
    for (int i = 0; i < r; ++i) {
        h.out.push_back(i);
        h.in.push_back(i);
    }
    return h;
}

BiLabeledGraph gen_star(int m, int d, StarVariant variant, bool looped) {
    BiLabeledGraph h;
    h.graph = Graph(1 + d);
    for (int i = 1; i <= d; ++i) h.graph.add_edge(0, i);
    if (looped) h.graph.add_edge(0, 0);
    h.out.assign(m, 0);
    if (variant == StarVariant::left) h.in.push_back(0);
    for (int i = 1; i <= d; ++i) h.in.push_back(i);
    if (variant == StarVariant::right) h.in.push_back(0);
    return h;
}

std::string blg_certificate(const BiLabeledGraph& h) {
    // Attach one fresh pendant vertex per tuple entry, coloured by position,
    // so that graph isomorphism of the decorated graphs matches bi-labeled
    // isomorphism exactly.
    int n = h.graph.n();
    int extra = h.l() + h.k();
    Graph aux(n + extra);
    for (auto [u, v] : h.graph.edges()) aux.add_edge(u, v);
    std::vector<int> colors(n + extra, 0);
    int next = n;
    for (int i = 0; i < h.l(); ++i, ++next) {
        aux.add_edge(h.out[i], next);
        colors[next] = 1 + i;
    }
    for (int j = 0; j < h.k(); ++j, ++next) {
        aux.add_edge(h.in[j], next);
        colors[next] = 1 + h.l() + j;
    }
    std::string cert = canonical_form(aux, colors).certificate;
    cert.push_back(static_cast<char>(h.l()));
    cert.push_back(static_cast<char>(h.k()));
    return cert;
}

bool blg_isomorphic(const BiLabeledGraph& h1, const BiLabeledGraph& h2) {
    if (h1.l() != h2.l() || h1.k() != h2.k() || h1.graph.n() != h2.graph.n()) return false;
    return blg_certificate(h1) == blg_certificate(h2);
}

}  // namespace blg
