#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace blg {

// Finite undirected graph. Simple except that loops are allowed; a loop is
// stored as a set diagonal bit. Vertices are 0..n-1.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }

    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }
    bool has_loop(int u) const { return adj_[idx(u, u)] != 0; }

    void add_edge(int u, int v) {
        adj_[idx(u, v)] = 1;
        adj_[idx(v, u)] = 1;
    }
    void remove_edge(int u, int v) {
        adj_[idx(u, v)] = 0;
        adj_[idx(v, u)] = 0;
    }

    // Degree counts a loop once (used for refinement invariants, not for
    // rotation systems, which treat loops as two edge ends).
    int degree(int u) const;
    std::vector<int> neighbors(int u) const;  // includes u itself if looped

    // Non-loop edges as sorted (u,v) pairs with u < v, then loops as (u,u).
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;  // loops count once
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // Raw adjacency bytes; usable as a non-canonical identity key.
    std::string adjacency_key() const;

  private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }
    int n_ = 0;
    std::vector<uint8_t> adj_;
};

// Undirected multigraph: parallel edges and multiple loops are kept as
// repeated entries of the edge list. Endpoints are stored with u <= v.
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {}
    explicit Multigraph(const Graph& g);

    int n() const { return n_; }
    void add_vertex() { ++n_; }
    void add_edge(int u, int v) {
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v});
    }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Forget multiplicities; loops survive as loops.
    Graph simplify() const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Contract the edges whose indices (into g.edges()) appear in `contracted`,
// then simplify. New vertices are the connected components of the contracted
// edge set; every surviving edge whose endpoints merge becomes a loop.
// Returns the quotient graph plus the old-vertex -> new-vertex map.
std::pair<Graph, std::vector<int>> contract_and_simplify(const Multigraph& g,
                                                         const std::vector<int>& contracted);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph delete_vertex(const Graph& g, int v);  // remaining vertices shift down
Graph delete_edge(const Graph& g, int u, int v);
Graph contract_edge(const Graph& g, int u, int v);  // simple-graph quotient, no loop from uv itself

// Complement within the loopless convention; with_loops also flips the
// diagonal (a looped complete graph as the ambient).
Graph complement(const Graph& g, bool with_loops = false);

// Replace edge uv by a path with `times` fresh internal vertices.
Graph subdivide_edge(const Graph& g, int u, int v, int times);
// Inverse: `path` lists consecutive vertices; interior vertices must have
// degree 2 and are removed, the endpoints become adjacent.
Graph unsubdivide_path(const Graph& g, const std::vector<int>& path);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
std::vector<int> component_labels(const Graph& g);

// Parse/emit the plain text format: first line the vertex count, then one
// "u v" line per edge, a loop written as "u u".
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

}  // namespace blg
