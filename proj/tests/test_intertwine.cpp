#include <doctest.h>

#include <random>

#include "blg/canonical.hpp"
#include "blg/hommatrix.hpp"
#include "blg/intertwine.hpp"
#include "util.hpp"

using namespace blg;
using namespace blg::testutil;

TEST_CASE("refinement partition splitting") {
    auto p = RefinementPartition::discrete_start(4);
    CHECK(p.classes.size() == 1);
    p.refine_by({0, 1, 0, 1});
    CHECK(p.classes == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    p.refine_by({0, 0, 5, 0});
    CHECK(p.classes.size() == 3);
    CHECK_THROWS(p.refine_by({0, 0}));
}

TEST_CASE("refinement ordering predicate") {
    auto coarse = RefinementPartition::discrete_start(4);
    auto fine = coarse;
    fine.refine_by({0, 0, 1, 1});
    CHECK(fine.is_refinement_of(coarse));
    CHECK(coarse.is_refinement_of(coarse));
    auto other = coarse;
    other.refine_by({0, 1, 0, 1});
    CHECK(!other.is_refinement_of(fine));
}

TEST_CASE("span rank on rational matrices") {
    auto mk = [](std::vector<int> vals) {
        RatMatrix m(2, 1, 0);
        for (size_t i = 0; i < vals.size(); ++i) m.e[i] = vals[i];
        return m;
    };
    std::vector<RatMatrix> mats{mk({1, 0}), mk({2, 0}), mk({1, 1}), mk({0, 3})};
    auto r = span_rank(mats);
    CHECK(r.rank == 2);
    CHECK(r.basis == std::vector<int>{0, 2});
    CHECK(span_rank({}).rank == 0);
}

TEST_CASE("orbit refinement matches automorphism orbits on small graphs") {
    for (const Graph& g : {cycle(5), path(4), complete(4)}) {
        auto p = orbit_refinement(g, 3);
        auto orbits = vertex_orbits(g);
        RefinementPartition truth;
        truth.size = g.n();
        truth.classes = orbits;
        truth.normalize();
        // hom-count refinement can never split an orbit
        CHECK(truth.is_refinement_of(p));
    }
    auto p = orbit_refinement(path(4), 4);
    CHECK(p.classes == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
}

TEST_CASE("orbit refinement is monotone in the corpus bound") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = random_graph(rng, 6, 0.4);
        auto p2 = orbit_refinement(g, 2);
        auto p3 = orbit_refinement(g, 3);
        auto p4 = orbit_refinement(g, 4);
        CHECK(p3.is_refinement_of(p2));
        CHECK(p4.is_refinement_of(p3));
    }
}

TEST_CASE("orbital refinement separates edges from non-edges") {
    Graph g = path(3);
    auto p = orbital_refinement(g, 2);
    // diagonal, edge pairs and non-adjacent pairs must land in different
    // classes once the corpus includes the single vertex and the single edge
    auto cls_of = [&](int i, int j) {
        for (size_t c = 0; c < p.classes.size(); ++c)
            for (int x : p.classes[c])
                if (x == i * 3 + j) return static_cast<int>(c);
        return -1;
    };
    CHECK(cls_of(0, 0) != cls_of(0, 1));
    CHECK(cls_of(0, 1) != cls_of(0, 2));
    CHECK(cls_of(0, 0) != cls_of(0, 2));
}

TEST_CASE("wl2 recovers the coherent structure of vertex-transitive graphs") {
    auto p = wl2(cycle(5));
    // C5: diagonal, adjacent pairs, distance-2 pairs
    CHECK(p.classes.size() == 3);
    auto q = wl2(complete(4));
    CHECK(q.classes.size() == 2);
}

TEST_CASE("wl2 separates non-isomorphic graphs with equal degree sequences") {
    Graph a = disjoint_union(cycle(3), cycle(3));
    Graph b = cycle(6);
    auto pa = wl2(a);
    auto pb = wl2(b);
    std::vector<size_t> sa, sb;
    for (auto& c : pa.classes) sa.push_back(c.size());
    for (auto& c : pb.classes) sb.push_back(c.size());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    CHECK(sa != sb);
}

TEST_CASE("wl2 is at least as fine as the true orbital partition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = random_graph(rng, 5, 0.5);
        int n = g.n();
        auto p = wl2(g);
        // true orbitals from Aut(g)
        auto auts = automorphisms(g);
        std::vector<int> rep(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int best = i * n + j;
                for (const auto& a : auts) best = std::min(best, a[i] * n + a[j]);
                rep[i * n + j] = best;
            }
        RefinementPartition truth = RefinementPartition::discrete_start(n * n);
        truth.refine_by(rep);
        CHECK(truth.is_refinement_of(p));
    }
}
