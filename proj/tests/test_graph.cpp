#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "blg/canonical.hpp"
#include "blg/enumerate.hpp"
#include "blg/graph.hpp"
#include "util.hpp"

using namespace blg;
using namespace blg::testutil;

TEST_CASE("text round trip and loops") {
    Graph g = parse_graph_text("4\n0 1\n1 2\n2 2\n");
    CHECK(g.n() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_loop(2));
    CHECK(!g.has_edge(0, 2));
    CHECK(parse_graph_text(format_graph_text(g)) == g);
    CHECK_THROWS(parse_graph_text("2\n0 5\n"));
    CHECK_THROWS(parse_graph_text("x"));
}

TEST_CASE("contraction keeps surviving loops and drops contracted parallels") {
    // two parallel edges between 0 and 1: contracting both yields one vertex, no loop
    Multigraph m(2);
    m.add_edge(0, 1);
    m.add_edge(0, 1);
    auto [g, map] = contract_and_simplify(m, {0, 1});
    CHECK(g.n() == 1);
    CHECK(!g.has_loop(0));
    CHECK(map[0] == map[1]);

    // contracting one of them turns the other into a loop
    Multigraph m2(2);
    m2.add_edge(0, 1);
    m2.add_edge(0, 1);
    auto [g2, map2] = contract_and_simplify(m2, {0});
    CHECK(g2.n() == 1);
    CHECK(g2.has_loop(0));

    // triangle, contract one edge -> single edge survives (parallel collapse)
    Multigraph t(cycle(3));
    auto [g3, map3] = contract_and_simplify(t, {0});
    CHECK(g3.n() == 2);
    CHECK(g3.edge_count() == 1);
    CHECK(!g3.has_loop(0));
    CHECK(!g3.has_loop(1));
}

TEST_CASE("subdivision and unsubdivision") {
    Graph c4 = cycle(4);
    // collapsing the two-edge path 0-1-2 of C4 gives a triangle
    Graph t = unsubdivide_path(c4, {0, 1, 2});
    CHECK(t.n() == 3);
    CHECK(is_isomorphic(t, cycle(3)));

    Graph k4 = complete(4);
    Graph sub = subdivide_edge(k4, 0, 1, 2);
    CHECK(sub.n() == 6);
    CHECK(!sub.has_edge(0, 1));
    CHECK(is_isomorphic(unsubdivide_path(sub, {0, 4, 5, 1}), k4));
    CHECK_THROWS(unsubdivide_path(k4, {0, 1, 2}));  // interior degree != 2
}

TEST_CASE("complement") {
    Graph p3 = path(3);
    Graph c = complement(p3);
    CHECK(c.edge_count() == 1);
    CHECK(c.has_edge(0, 2));
    CHECK(complement(c) == p3);
    Graph with = complement(p3, true);
    CHECK(with.has_loop(0));
    CHECK(complement(with, true) == p3);
}

TEST_CASE("components") {
    Graph g = disjoint_union(cycle(3), path(2));
    CHECK(component_count(g) == 2);
    CHECK(!is_connected(g));
    CHECK(is_connected(cycle(5)));
}

TEST_CASE("canonical form separates and identifies") {
    // same degree sequence, not isomorphic: C6 vs two triangles
    Graph c6 = cycle(6);
    Graph tt = disjoint_union(cycle(3), cycle(3));
    CHECK(!is_isomorphic(c6, tt));

    // a relabeled Petersen graph matches the original
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    std::mt19937_64 rng(7);
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph shuffled(10);
        for (auto [u, v] : pet.edges()) shuffled.add_edge(perm[u], perm[v]);
        CHECK(is_isomorphic(pet, shuffled));
    }

    // loops matter
    Graph a(2), b(2);
    a.add_edge(0, 1);
    b.add_edge(0, 1);
    b.add_edge(0, 0);
    CHECK(!is_isomorphic(a, b));
}

TEST_CASE("automorphism counts of known graphs") {
    CHECK(automorphisms(cycle(5)).size() == 10);
    CHECK(automorphisms(complete(4)).size() == 24);
    CHECK(automorphisms(path(3)).size() == 2);
    Graph e3(3);  // edgeless
    CHECK(automorphisms(e3).size() == 6);
    CHECK(vertex_orbits(cycle(5)).size() == 1);
    CHECK(vertex_orbits(path(3)).size() == 2);
}

TEST_CASE("enumeration class counts") {
    CHECK(enumerate_graphs(1, {}).size() == 1);
    CHECK(enumerate_graphs(2, {}).size() == 2);
    CHECK(enumerate_graphs(3, {}).size() == 4);
    CHECK(enumerate_graphs(4, {}).size() == 11);
    CHECK(enumerate_graphs(5, {}).size() == 34);
    CHECK(enumerate_graphs(6, {}).size() == 156);

    EnumerateOptions loops;
    loops.allow_loops = true;
    CHECK(enumerate_graphs(1, loops).size() == 2);
    CHECK(enumerate_graphs(2, loops).size() == 6);

    EnumerateOptions conn;
    conn.connected_only = true;
    CHECK(enumerate_graphs(4, conn).size() == 6);
    CHECK(enumerate_graphs(5, conn).size() == 21);
}

TEST_CASE("enumeration agrees with brute-force dedup at n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> certs;
        int pairs = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1L << bit)) g.add_edge(u, v);
            certs.insert(canonical_form(g).certificate);
        }
        auto classes = enumerate_graphs(n, {});
        CHECK(classes.size() == certs.size());
        std::set<std::string> enum_certs;
        for (const Graph& g : classes) enum_certs.insert(canonical_form(g).certificate);
        CHECK(enum_certs == certs);
    }
}

TEST_CASE("rooted enumeration dedups by orbit") {
    auto rooted = enumerate_rooted_connected(3, {});
    // n=1: 1; n=2: 1; n=3: path has 2 root orbits, triangle 1 -> total 5
    CHECK(rooted.size() == 5);
}
