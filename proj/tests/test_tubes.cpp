#include "doctest.h"
#include "testutil.hpp"
#include "vtsep/generators.hpp"
#include "vtsep/tubes.hpp"

using namespace vtsep;
using testutil::cycle;

namespace {

VertexSet range_set(int lo, int hi, int n) {
    std::vector<int> ids;
    for (int v = lo; v <= hi; ++v) ids.push_back(v);
    return VertexSet(ids, n);
}

// Rungs lo..hi of make_family("prism", {n}) (top i and bottom n+i).
VertexSet rung_range(int lo, int hi, int n) {
    std::vector<int> ids;
    for (int i = lo; i <= hi; ++i) {
        ids.push_back(i);
        ids.push_back(n + i);
    }
    return VertexSet::from_unsorted(ids, 2 * n);
}

}  // namespace

TEST_CASE("verify tube on cycle and prism") {
    Graph c20 = cycle(20);
    TubeCertificate t = verify_tube(c20, range_set(1, 8, 20), VertexSet::of({0}, 20),
                                    VertexSet::of({9}, 20), 1, 9);
    CHECK(t.s == 1);
    CHECK(t.t == 9);

    GeneratedGraph prism20 = make_family("prism", {20});
    VertexSet a = rung_range(1, 8, 20);
    VertexSet l = rung_range(0, 0, 20);
    VertexSet r = rung_range(9, 9, 20);
    TubeCertificate pt = verify_tube(prism20.graph, a, l, r, 1, 9);
    CHECK(pt.A.size() == 16);

    CHECK_THROWS_WITH_AS(verify_tube(c20, range_set(1, 8, 20), VertexSet::of({0, 9}, 20),
                                     VertexSet::empty_set(20), 1, 9),
                         "empty side in boundary partition", std::invalid_argument);
    CHECK_THROWS_AS(verify_tube(c20, range_set(1, 8, 20), VertexSet::of({0}, 20),
                                VertexSet::of({10}, 20), 1, 9),
                    std::invalid_argument);
    // Cross distance above t fails naming the witness pair.
    CHECK_THROWS_AS(verify_tube(c20, range_set(1, 8, 20), VertexSet::of({0}, 20),
                                VertexSet::of({9}, 20), 1, 10),
                    std::invalid_argument);
}

TEST_CASE("find boundary partition") {
    Graph c20 = cycle(20);
    auto p = find_boundary_partition(c20, range_set(1, 8, 20), 1, 5);
    REQUIRE(p.has_value());
    CHECK(((p->first == VertexSet::of({0}, 20) && p->second == VertexSet::of({9}, 20)) ||
           (p->first == VertexSet::of({9}, 20) && p->second == VertexSet::of({0}, 20))));

    CHECK(!find_boundary_partition(c20, range_set(1, 18, 20), 1, 2).has_value());

    // Single boundary vertex cannot split.
    Graph path = Graph::undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(!find_boundary_partition(path, VertexSet::of({0, 1}, 5), 1, 2).has_value());
}

TEST_CASE("merge of overlapping tubes on a 40-cycle") {
    Graph c40 = cycle(40);
    TubeCertificate c1 = verify_tube(c40, range_set(1, 20, 40), VertexSet::of({0}, 40),
                                     VertexSet::of({21}, 40), 1, 19);
    TubeCertificate c2 = verify_tube(c40, range_set(11, 30, 40), VertexSet::of({10}, 40),
                                     VertexSet::of({31}, 40), 1, 19);
    MergeReport rep = merge_status(c40, c1, c2);
    CHECK(rep.merges);
    CHECK(rep.u_empty);
    CHECK(rep.reg.P == range_set(11, 20, 40));
    CHECK(rep.reg.Q == VertexSet::of({21}, 40));
    CHECK(rep.reg.Y == VertexSet::of({0}, 40));
    CHECK(rep.reg.T == VertexSet::of({10}, 40));
    CHECK(rep.reg.W == VertexSet::of({31}, 40));

    TubeCertificate merged = merge_tubes(c40, c1, c2);
    CHECK(merged.A == range_set(1, 30, 40));
    CHECK(merged.L == VertexSet::of({0}, 40));
    CHECK(merged.R == VertexSet::of({31}, 40));
    CHECK(merged.s == 0);
    CHECK(merged.t == 9);  // min(31, 9) around the cycle

    // Non-merging inputs: identical tubes (S = X = empty).
    CHECK(!merge_status(c40, c1, c1).merges);
    CHECK_THROWS_WITH_AS(merge_tubes(c40, c1, c1), "tubes do not merge", std::invalid_argument);

    // Far-apart tubes (P empty).
    TubeCertificate f1 = verify_tube(c40, range_set(1, 5, 40), VertexSet::of({0}, 40),
                                     VertexSet::of({6}, 40), 1, 5);
    TubeCertificate f2 = verify_tube(c40, range_set(21, 25, 40), VertexSet::of({20}, 40),
                                     VertexSet::of({26}, 40), 1, 5);
    CHECK(!merge_status(c40, f1, f2).merges);
}

TEST_CASE("merge on the prism analogue") {
    GeneratedGraph prism40 = make_family("prism", {40});
    const Graph& g = prism40.graph;
    TubeCertificate c1 = verify_tube(g, rung_range(1, 20, 40), rung_range(0, 0, 40),
                                     rung_range(21, 21, 40), 1, 19);
    TubeCertificate c2 = verify_tube(g, rung_range(11, 30, 40), rung_range(10, 10, 40),
                                     rung_range(31, 31, 40), 1, 19);
    CHECK(merge_status(g, c1, c2).merges);
    TubeCertificate merged = merge_tubes(g, c1, c2);
    CHECK(merged.A == rung_range(1, 30, 40));
    CHECK(merged.t == 9);
}

TEST_CASE("merged tubes re-verify (round trip)") {
    Graph c60 = cycle(60);
    testutil::Rng rng(17);
    for (int round = 0; round < 40; ++round) {
        int start = rng.below(60);
        int len = 15 + rng.below(10);
        int shift = 5 + rng.below(len - 8);
        auto interval = [&](int s, int l) {
            std::vector<int> ids;
            for (int i = 0; i < l; ++i) ids.push_back((s + i) % 60);
            return VertexSet::from_unsorted(ids, 60);
        };
        VertexSet a1 = interval(start, len);
        VertexSet a2 = interval((start + shift) % 60, len);
        VertexSet l1 = interval((start + 59) % 60, 1), r1 = interval((start + len) % 60, 1);
        VertexSet l2 = interval((start + shift + 59) % 60, 1), r2 = interval((start + shift + len) % 60, 1);
        TubeCertificate c1 = verify_tube(c60, a1, l1, r1, 1, 2);
        TubeCertificate c2 = verify_tube(c60, a2, l2, r2, 1, 2);
        MergeReport rep = merge_status(c60, c1, c2);
        if (!rep.merges) continue;
        TubeCertificate merged = merge_tubes(c60, c1, c2);
        // merge_tubes verifies internally; re-verify explicitly with its own
        // parameters as the round-trip property.
        CHECK_NOTHROW(verify_tube(c60, merged.A, merged.L, merged.R, merged.s, merged.t));
    }
}

TEST_CASE("translated tubes with separated boundaries must merge") {
    // On a long cycle, a (1,3)-tube and any rotation of it that overlaps with
    // all four outer regions nonempty and separated boundaries satisfies the
    // merge guarantee, so merge_status has to report a merge every time.
    Graph c60 = cycle(60);
    const int len = 20;
    auto interval = [&](int s, int l) {
        std::vector<int> ids;
        for (int i = 0; i < l; ++i) ids.push_back((s + i) % 60);
        return VertexSet::from_unsorted(ids, 60);
    };
    TubeCertificate base = verify_tube(c60, interval(1, len), interval(0, 1), interval(1 + len, 1), 1, 3);
    for (int shift = 2; shift <= len - 2; ++shift) {
        CAPTURE(shift);
        TubeCertificate moved = verify_tube(c60, interval(1 + shift, len), interval(shift, 1),
                                            interval(1 + len + shift, 1), 1, 3);
        // Hypotheses of the merge guarantee with k = 1: separated boundaries
        // and a deep outside.
        CHECK(depth(c60, set_union(base.A, boundary_profile(c60, base.A).vertex_boundary).complement()) >=
              3);
        MergeReport rep = merge_status(c60, base, moved);
        CHECK(rep.p_nonempty);
        CHECK(rep.s_nonempty);
        CHECK(rep.x_nonempty);
        CHECK(rep.z_nonempty);
        CHECK(rep.merges);
    }
}

TEST_CASE("certificates weaken monotonically") {
    Graph c20 = cycle(20);
    VertexSet a = range_set(1, 8, 20);
    VertexSet l = VertexSet::of({0}, 20), r = VertexSet::of({9}, 20);
    verify_tube(c20, a, l, r, 1, 9);
    for (int s2 = 1; s2 <= 3; ++s2)
        for (int t2 = 9; t2 >= 1; --t2) CHECK_NOTHROW(verify_tube(c20, a, l, r, s2, t2));
}

TEST_CASE("balloon check") {
    Graph c30 = cycle(30);
    BalloonReport rep = balloon_check(c30, VertexSet::of({0, 1}, 30), 0, 1);
    REQUIRE(rep.component_sets.size() == 1);
    CHECK(rep.component_depths[0] == 14);
    CHECK(rep.deep_count == 1);
    CHECK(rep.at_most_one_deep);

    GeneratedGraph t9 = make_family("torus", {9, 9});
    int center = 4 * 9 + 4;
    VertexSet x = boundary_profile(t9.graph, ball(t9.graph, center, 1)).vertex_boundary;
    BalloonReport rep2 = balloon_check(t9.graph, x, center, 2);
    REQUIRE(rep2.component_sets.size() == 2);
    int deep = 0, shallow = 0;
    for (int d : rep2.component_depths) (d >= 4 ? deep : shallow) += 1;
    CHECK(deep == 1);
    CHECK(shallow == 1);
    CHECK(rep2.at_most_one_deep);

    CHECK_THROWS_AS(balloon_check(c30, VertexSet::empty_set(30), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(balloon_check(c30, VertexSet::of({0, 5}, 30), 0, 1), std::invalid_argument);
}

TEST_CASE("balloon check treats truncated components as infinite") {
    // Window of the two-way path, cut around the middle: both sides reach the
    // frontier, so neither counts as a finite deep component.
    WindowGraph w = window(path_presentation(), 10);
    int mid = w.vertex_id(0, 0);
    VertexSet cut = VertexSet::of({w.vertex_id(0, -1), w.vertex_id(0, 1)}, w.graph.vertex_count());
    BalloonReport rep = balloon_check(w.graph, cut, w.vertex_id(0, 0), 1, &w.frontier);
    (void)mid;
    REQUIRE(rep.component_sets.size() == 3);
    int truncated = 0;
    for (size_t i = 0; i < rep.component_sets.size(); ++i) truncated += rep.touches_frontier[i];
    CHECK(truncated == 2);
    CHECK(rep.deep_count == 0);  // the middle singleton is shallow
    CHECK(rep.at_most_one_deep);
}
