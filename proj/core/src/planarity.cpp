#include "blg/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>
#include <set>
#include <stdexcept>

namespace blg {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost_simple(const Graph& g) {
    BoostGraph bg(g.n());
    int idx = 0;
    auto index_map = boost::get(boost::edge_index, bg);
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;  // loops never affect planarity
        auto e = boost::add_edge(u, v, bg).first;
        index_map[e] = idx++;
    }
    return bg;
}

}  // namespace

PlanarityResult check_planar(const Graph& g) {
    BoostGraph bg = to_boost_simple(g);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
    std::vector<Edge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    PlanarityResult r;
    r.planar = planar;
    if (!planar) {
        std::set<std::pair<int, int>> seen;
        for (Edge e : kuratowski) {
            int u = static_cast<int>(boost::source(e, bg));
            int v = static_cast<int>(boost::target(e, bg));
            if (u > v) std::swap(u, v);
            if (seen.insert({u, v}).second) r.witness.push_back({u, v});
        }
    }
    return r;
}

bool is_planar(const Graph& g) { return check_planar(g).planar; }
bool is_planar(const Multigraph& g) { return is_planar(g.simplify()); }

std::vector<std::vector<int>> rotation_system(const Graph& g) {
    BoostGraph bg = to_boost_simple(g);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data());
    if (!planar) throw std::invalid_argument("rotation_system: graph is not planar");
    std::vector<std::vector<int>> rot(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (Edge e : embedding[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            rot[v].push_back(a == v ? b : a);
        }
    return rot;
}

Envelope build_envelope(const BiLabeledGraph& h) {
    h.validate();
    Envelope env;
    int n = h.graph.n();
    int points = h.l() + h.k();
    // ring order follows a_1..a_l, b_k..b_1
    std::vector<int> anchors = h.out;
    for (int j = h.k() - 1; j >= 0; --j) anchors.push_back(h.in[j]);

    Multigraph m(n + points);
    for (auto [u, v] : h.graph.edges()) m.add_edge(u, v);
    for (int i = 0; i < points; ++i) {
        env.cycle.push_back(n + i);
        m.add_edge(anchors[i], n + i);
    }
    if (points == 1) {
        m.add_edge(n, n);
    } else if (points == 2) {
        m.add_edge(n, n + 1);
        m.add_edge(n, n + 1);
    } else if (points >= 3) {
        for (int i = 0; i < points; ++i) m.add_edge(n + i, n + (i + 1) % points);
    }
    env.enveloped = m;
    env.apexed = m;
    if (points > 0) {
        env.apexed.add_vertex();
        env.apex = n + points;
        for (int c : env.cycle) env.apexed.add_edge(c, env.apex);
    }
    return env;
}

bool in_P(const BiLabeledGraph& h) { return is_planar(build_envelope(h).apexed); }

bool is_facial_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.empty()) throw std::invalid_argument("facial cycle: empty cycle");
    std::set<int> uniq(cycle.begin(), cycle.end());
    if (uniq.size() != cycle.size()) throw std::invalid_argument("facial cycle: repeated vertex");
    for (int v : cycle)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("facial cycle: vertex out of range");
    if (cycle.size() == 1) {
        if (!g.has_loop(cycle[0])) throw std::invalid_argument("facial cycle: not a cycle");
    } else if (cycle.size() == 2) {
        throw std::invalid_argument("facial cycle: two-vertex cycles need parallel edges");
    } else {
        for (size_t i = 0; i < cycle.size(); ++i)
            if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
                throw std::invalid_argument("facial cycle: not a cycle");
    }
    if (!is_planar(g)) return false;
    return common_face(g, cycle);
}

bool common_face(const Graph& g, const std::vector<int>& vertices) {
    if (!is_planar(g)) return false;
    Graph aug(g.n() + 1);
    for (auto [u, v] : g.edges()) aug.add_edge(u, v);
    std::set<int> uniq(vertices.begin(), vertices.end());
    for (int v : uniq) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("common face: vertex out of range");
        aug.add_edge(v, g.n());
    }
    return is_planar(aug);
}

}  // namespace blg
