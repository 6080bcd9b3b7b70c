#include "blg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blg {

int Graph::degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        if (adj_[idx(u, v)]) ++d;
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (adj_[idx(u, v)]) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[idx(u, v)]) out.push_back({u, v});
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(u, u)]) out.push_back({u, u});
    return out;
}

int Graph::edge_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u; v < n_; ++v)
            if (adj_[idx(u, v)]) ++c;
    return c;
}

std::string Graph::adjacency_key() const {
    std::string key(1, static_cast<char>(n_));
    key.reserve(1 + adj_.size());
    for (uint8_t b : adj_) key.push_back(static_cast<char>(b));
    return key;
}

Multigraph::Multigraph(const Graph& g) : n_(g.n()) {
    for (auto [u, v] : g.edges()) add_edge(u, v);
}

Graph Multigraph::simplify() const {
    Graph g(n_);
    for (auto [u, v] : edges_) g.add_edge(u, v);
    return g;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

std::pair<Graph, std::vector<int>> contract_and_simplify(const Multigraph& g,
                                                         const std::vector<int>& contracted) {
    UnionFind uf(g.n());
    std::vector<char> in_set(g.edges().size(), 0);
    for (int e : contracted) {
        in_set.at(e) = 1;
        uf.unite(g.edges()[e].first, g.edges()[e].second);
    }
    std::vector<int> map(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        int r = uf.find(v);
        if (map[r] < 0) map[r] = next++;
        map[v] = map[r];
    }
    Graph out(next);
    for (size_t e = 0; e < g.edges().size(); ++e) {
        if (in_set[e]) continue;
        auto [u, v] = g.edges()[e];
        out.add_edge(map[u], map[v]);  // u,v merged -> loop kept
    }
    return {out, map};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

Graph delete_vertex(const Graph& g, int v) {
    Graph out(g.n() - 1);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(shift(a), shift(b));
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    Graph out(g.n() - 1);
    auto map = [u, v](int x) {
        if (x == v) return u;
        return x > v ? x - 1 : x;
    };
    for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        out.add_edge(map(a), map(b));
    }
    return out;
}

Graph complement(const Graph& g, bool with_loops) {
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u; v < g.n(); ++v) {
            if (u == v && !with_loops) {
                if (g.has_loop(u)) out.add_edge(u, u);
                continue;
            }
            if (!g.has_edge(u, v)) out.add_edge(u, v);
        }
    return out;
}

Graph subdivide_edge(const Graph& g, int u, int v, int times) {
    if (!g.has_edge(u, v) || u == v) throw std::invalid_argument("subdivide: not a plain edge");
    Graph out(g.n() + times);
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
    int prev = u;
    for (int i = 0; i < times; ++i) {
        out.add_edge(prev, g.n() + i);
        prev = g.n() + i;
    }
    out.add_edge(prev, v);
    return out;
}

Graph unsubdivide_path(const Graph& g, const std::vector<int>& path) {
    if (path.size() < 3) throw std::invalid_argument("unsubdivide: path too short");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("unsubdivide: not a path");
    for (size_t i = 1; i + 1 < path.size(); ++i)
        if (g.degree(path[i]) != 2 || g.has_loop(path[i]))
            throw std::invalid_argument("unsubdivide: interior vertex not of degree 2");
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    std::sort(interior.rbegin(), interior.rend());
    Graph out = g;
    out.add_edge(path.front(), path.back());
    for (int v : interior) out = delete_vertex(out, v);
    return out;
}

std::vector<int> component_labels(const Graph& g) {
    std::vector<int> label(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (label[s] >= 0) continue;
        std::vector<int> stack{s};
        label[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (label[v] < 0) {
                    label[v] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    return label;
}

int component_count(const Graph& g) {
    auto l = component_labels(g);
    return l.empty() ? 0 : 1 + *std::max_element(l.begin(), l.end());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n) || n < 0) throw std::invalid_argument("graph text: bad vertex count");
    Graph g(n);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("graph text: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph text: endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace blg
