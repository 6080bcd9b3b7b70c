#include <doctest.h>

#include <random>

#include "blg/bilabeled.hpp"
#include "blg/canonical.hpp"
#include "blg/partition.hpp"
#include "util.hpp"

using namespace blg;
using namespace blg::testutil;

TEST_CASE("compose glue and contraction") {
    // M12 o M21 = I
    auto m12 = gen_M(1, 2);
    auto m21 = transpose(m12);
    auto r = compose(m12, m21);
    CHECK(blg_isomorphic(r, gen_I()));
    CHECK(!r.graph.has_loop(0));

    // A o A = path on 3 vertices with endpoints labeled
    auto aa = compose(gen_A(), gen_A());
    CHECK(aa.graph.n() == 3);
    CHECK(aa.graph.edge_count() == 2);
    CHECK(aa.out.size() == 1);
    CHECK(aa.in.size() == 1);
    CHECK(aa.out[0] != aa.in[0]);
    CHECK(!aa.graph.has_edge(aa.out[0], aa.in[0]));
}

TEST_CASE("schur of edge with identity produces the looped vertex") {
    auto r = schur(gen_A(), gen_I());
    CHECK(blg_isomorphic(r, gen_M_looped(1, 1)));
}

TEST_CASE("tensor and transpose shapes") {
    auto t = tensor(gen_A(), gen_S());
    CHECK(t.l() == 3);
    CHECK(t.k() == 3);
    CHECK(t.graph.n() == 4);
    auto tt = transpose(t);
    CHECK(tt.out == t.in);
    CHECK(tt.in == t.out);
    CHECK(blg_isomorphic(transpose(tt), t));
}

TEST_CASE("identity is neutral for composition") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        auto h = random_blg(rng, 5, 2, 2, 0.5, true);
        CHECK(blg_isomorphic(compose(identity_tensor(2), h), h));
        CHECK(blg_isomorphic(compose(h, identity_tensor(2)), h));
    }
}

TEST_CASE("swap composed with itself is the identity pair") {
    auto s = gen_S();
    CHECK(blg_isomorphic(compose(s, s), identity_tensor(2)));
}

TEST_CASE("bi-labeled isomorphism is tuple sensitive") {
    BiLabeledGraph h1{path(3), {0}, {2}};
    BiLabeledGraph h2{path(3), {0}, {0}};
    BiLabeledGraph h3{path(3), {2}, {0}};
    CHECK(!blg_isomorphic(h1, h2));
    CHECK(blg_isomorphic(h1, h3));  // the path has a flip symmetry
    BiLabeledGraph h4{path(3), {1}, {0}};
    BiLabeledGraph h5{path(3), {1}, {2}};
    CHECK(blg_isomorphic(h4, h5));
    CHECK(!blg_isomorphic(h1, h4));
}

TEST_CASE("stars have the documented shape") {
    auto s = gen_star(2, 3);
    CHECK(s.graph.n() == 4);
    CHECK(s.l() == 2);
    CHECK(s.k() == 3);
    CHECK(s.out[0] == s.out[1]);
    auto sl = gen_star(1, 2, StarVariant::left);
    CHECK(sl.k() == 3);
    CHECK(sl.in[0] == sl.out[0]);
    auto sr = gen_star(1, 2, StarVariant::right);
    CHECK(sr.in[2] == sr.out[0]);
    auto ring = gen_star(1, 2, StarVariant::plain, true);
    CHECK(ring.graph.has_loop(ring.out[0]));
}

TEST_CASE("partition bridge round trip") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_int_distribution<int> d(0, 3);
        int l = d(rng), k = d(rng);
        BiLabeledGraph h;
        std::uniform_int_distribution<int> nd(1, 4);
        h.graph = Graph(nd(rng));
        std::uniform_int_distribution<int> vd(0, h.graph.n() - 1);
        for (int i = 0; i < l; ++i) h.out.push_back(vd(rng));
        for (int i = 0; i < k; ++i) h.in.push_back(vd(rng));
        LabeledPartition p = blg_to_partition(h);
        p.validate();
        CHECK(blg_isomorphic(partition_to_blg(p), h));
        CHECK(blg_to_partition(partition_to_blg(p)) == p);
    }
}

TEST_CASE("partition bridge commutes with the operations") {
    std::mt19937_64 rng(17);
    auto edgeless = [&](int l, int k) {
        BiLabeledGraph h;
        std::uniform_int_distribution<int> nd(1, 3);
        h.graph = Graph(nd(rng) + 1);
        std::uniform_int_distribution<int> vd(0, h.graph.n() - 1);
        for (int i = 0; i < l; ++i) h.out.push_back(vd(rng));
        for (int i = 0; i < k; ++i) h.in.push_back(vd(rng));
        return h;
    };
    for (int rep = 0; rep < 60; ++rep) {
        std::uniform_int_distribution<int> d(0, 2);
        int l1 = d(rng), mid = d(rng), k2 = d(rng);
        auto h1 = edgeless(l1, mid);
        auto h2 = edgeless(mid, k2);
        CHECK(blg_to_partition(compose(h1, h2)) ==
              compose(blg_to_partition(h1), blg_to_partition(h2)));
        CHECK(blg_to_partition(tensor(h1, h2)) ==
              tensor(blg_to_partition(h1), blg_to_partition(h2)));
        CHECK(blg_to_partition(transpose(h1)) == transpose(blg_to_partition(h1)));
    }
}

TEST_CASE("partition enumeration sizes are Bell numbers") {
    CHECK(enumerate_partitions(0, 0).size() == 1);
    CHECK(enumerate_partitions(1, 1).size() == 2);
    CHECK(enumerate_partitions(2, 1).size() == 5);
    CHECK(enumerate_partitions(2, 2).size() == 15);
    CHECK(enumerate_partitions(3, 2).size() == 52);
    CHECK(enumerate_partitions(3, 3).size() == 203);
}

TEST_CASE("crossing detection") {
    // blocks {a1, b1}, {a2, b2} with order a1 < a2 < b2 < b1: nested, fine
    LabeledPartition nested{2, 2, {{0, 3}, {1, 2}}, 0};
    CHECK(is_noncrossing(nested));
    // swap wiring {a1, b2}, {a2, b1}: crossing
    LabeledPartition crossing{2, 2, {{0, 2}, {1, 3}}, 0};
    CHECK(!is_noncrossing(crossing));
}
