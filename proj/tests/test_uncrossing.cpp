#include "doctest.h"
#include "testutil.hpp"
#include "vtsep/uncrossing.hpp"

using namespace vtsep;
using testutil::cycle;

namespace {

VertexSet range_set(int lo, int hi, int n) {  // inclusive interval
    std::vector<int> ids;
    for (int v = lo; v <= hi; ++v) ids.push_back(v);
    return VertexSet(ids, n);
}

}  // namespace

TEST_CASE("regions on overlapping arcs of a 12-cycle") {
    Graph c12 = cycle(12);
    RegionDecomposition r = regions(c12, range_set(0, 5, 12), range_set(3, 8, 12));
    CHECK(r.P == VertexSet::of({3, 4, 5}, 12));
    CHECK(r.Q == VertexSet::of({6}, 12));
    CHECK(r.S == VertexSet::of({7, 8}, 12));
    CHECK(r.T == VertexSet::of({2}, 12));
    CHECK(r.U.empty());
    CHECK(r.W == VertexSet::of({9}, 12));
    CHECK(r.X == VertexSet::of({0, 1}, 12));
    CHECK(r.Y == VertexSet::of({11}, 12));
    CHECK(r.Z == VertexSet::of({10}, 12));
}

TEST_CASE("regions identity case") {
    Graph c12 = cycle(12);
    VertexSet a = range_set(0, 5, 12);
    RegionDecomposition r = regions(c12, a, a);
    CHECK(r.P == a);
    CHECK(r.U == VertexSet::of({6, 11}, 12));
    CHECK(r.Q.empty());
    CHECK(r.S.empty());
    CHECK(r.T.empty());
    CHECK(r.W.empty());
    CHECK(r.X.empty());
    CHECK(r.Y.empty());
    CHECK(r.Z.size() == 4);
}

TEST_CASE("regions far apart") {
    Graph c20 = cycle(20);
    RegionDecomposition r = regions(c20, range_set(0, 1, 20), range_set(10, 11, 20));
    CHECK(r.P.empty());
    CHECK(r.Q.empty());
    CHECK(r.T.empty());
    CHECK(r.U.empty());
    CHECK(r.X == range_set(0, 1, 20));
    CHECK(r.S == range_set(10, 11, 20));
    CHECK(r.Y == VertexSet::of({2, 19}, 20));
    CHECK(r.W == VertexSet::of({9, 12}, 20));
    CHECK(r.Z.size() == 12);
}

TEST_CASE("uncrossing report on the worked examples") {
    Graph c12 = cycle(12);
    UncrossingReport rep = uncrossing_report(c12, range_set(0, 5, 12), range_set(3, 8, 12));
    CHECK(rep.lhs1 == 4);
    CHECK(rep.rhs1 == 4);
    CHECK(rep.lhs2 == 4);
    CHECK(rep.rhs2 == 4);
    CHECK(rep.third_applicable);
    CHECK(rep.third_k == 2);
    CHECK(rep.q_union_u == 1);
    CHECK(rep.all_hold());

    VertexSet a = range_set(0, 5, 12);
    UncrossingReport same = uncrossing_report(c12, a, a);
    CHECK(same.lhs1 == same.rhs1);
    CHECK(same.all_hold());

    Graph c20 = cycle(20);
    UncrossingReport far = uncrossing_report(c20, range_set(0, 1, 20), range_set(10, 11, 20));
    CHECK(far.lhs2 == 4);
    CHECK(far.rhs2 == 4);
    CHECK(far.all_hold());
}

TEST_CASE("regions swap symmetry") {
    testutil::Rng rng(301);
    for (int round = 0; round < 150; ++round) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(10), 40);
        VertexSet a1 = testutil::random_subset(rng, g.vertex_count(), 40);
        VertexSet a2 = testutil::random_subset(rng, g.vertex_count(), 40);
        RegionDecomposition r = regions(g, a1, a2);
        RegionDecomposition s = regions(g, a2, a1);
        CHECK(r.P == s.P);
        CHECK(r.Q == s.T);
        CHECK(r.T == s.Q);
        CHECK(r.S == s.X);
        CHECK(r.X == s.S);
        CHECK(r.U == s.U);
        CHECK(r.W == s.Y);
        CHECK(r.Y == s.W);
        CHECK(r.Z == s.Z);
    }
}

TEST_CASE("uncrossing inequalities hold on random graphs") {
    // The module's central falsifiable claim; the acceptance suite runs the
    // full 10k-instance version.
    testutil::Rng rng(99);
    int applicable_seen = 0;
    for (int round = 0; round < 2000; ++round) {
        Graph g = testutil::random_graph(rng, 3 + rng.below(14), 10 + rng.below(60));
        VertexSet a1 = testutil::random_subset(rng, g.vertex_count(), 20 + rng.below(50));
        VertexSet a2 = testutil::random_subset(rng, g.vertex_count(), 20 + rng.below(50));
        UncrossingReport rep = uncrossing_report(g, a1, a2);
        CHECK(rep.holds1);
        CHECK(rep.holds2);
        if (rep.third_applicable) {
            CHECK(rep.holds3);
            ++applicable_seen;
        }
    }
    CHECK(applicable_seen > 0);
}
