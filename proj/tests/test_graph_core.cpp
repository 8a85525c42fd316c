#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"
#include "vtsep/generators.hpp"
#include "vtsep/graph.hpp"

using namespace vtsep;
using testutil::cycle;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph::undirected(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::undirected(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::undirected(3, {{0, 5}}), std::invalid_argument);
    Graph g = Graph::undirected(3, {{0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("bfs distances") {
    Graph c6 = cycle(6);
    DistanceMap d = bfs_distances(c6, VertexSet::of({0}, 6));
    CHECK(d.at(3) == 3);

    DistanceMap d2 = bfs_distances(c6, VertexSet::of({0, 3}, 6));
    CHECK(d2.at(1) == 1);
    CHECK(d2.at(2) == 1);

    Graph two = Graph::undirected(2, {});
    DistanceMap d3 = bfs_distances(two, VertexSet::of({0}, 2));
    CHECK(!d3.reached(1));
    CHECK_THROWS_AS(d3.at(1), std::logic_error);

    CHECK_THROWS_AS(bfs_distances(c6, VertexSet::empty_set(6)), std::invalid_argument);
}

TEST_CASE("boundary profile") {
    Graph c6 = cycle(6);
    BoundaryProfile p = boundary_profile(c6, VertexSet::of({0, 1}, 6));
    CHECK(p.vertex_boundary == VertexSet::of({2, 5}, 6));
    CHECK(p.edge_cut_size == 2);
    CHECK(p.out_boundary == p.vertex_boundary);

    Graph c12 = cycle(12);
    CHECK(boundary_profile(c12, VertexSet::of({3, 4, 5}, 12)).vertex_boundary == VertexSet::of({2, 6}, 12));

    GeneratedGraph z7 = make_circulant(7, {1, 2}, true);
    BoundaryProfile dp = boundary_profile(z7.graph, VertexSet::of({0}, 7));
    CHECK(dp.out_boundary == VertexSet::of({1, 2}, 7));
    CHECK(dp.in_boundary == VertexSet::of({5, 6}, 7));
}

TEST_CASE("depth") {
    Graph c9 = cycle(9);
    CHECK(depth(c9, VertexSet::of({0, 1, 2, 3, 4}, 9)) == 3);

    Graph c6 = cycle(6);
    CHECK(depth(c6, VertexSet::of({2}, 6)) == 1);
    CHECK_THROWS_AS(depth(c6, VertexSet::full(6)), std::invalid_argument);
    CHECK_THROWS_AS(depth(c6, VertexSet::empty_set(6)), std::invalid_argument);

    // 7x7 torus, A = ball of radius 2 around the center; oracle: nearest
    // complement vertex from each member, via Floyd-Warshall.
    GeneratedGraph t = make_family("torus", {7, 7});
    VertexSet a = ball(t.graph, 3 * 7 + 3, 2);
    CHECK(a.size() == 13);
    auto dist = testutil::oracle_distances(t.graph);
    int oracle_depth = 0;
    for (int v : a) {
        int near = 1 << 28;
        for (int u = 0; u < 49; ++u)
            if (!a.contains(u)) near = std::min(near, dist[v][u]);
        oracle_depth = std::max(oracle_depth, near);
    }
    CHECK(oracle_depth == 3);
    CHECK(depth(t.graph, a) == 3);
}

TEST_CASE("diameter of set") {
    Graph c10 = cycle(10);
    CHECK(diameter_of_set(c10, VertexSet::full(10)) == 5);
    Graph c12 = cycle(12);
    CHECK(diameter_of_set(c12, VertexSet::of({0, 1, 2}, 12)) == 2);

    GeneratedGraph pet = make_family("petersen", {});
    auto dist = testutil::oracle_distances(pet.graph);
    int oracle_diam = 0;
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) oracle_diam = std::max(oracle_diam, dist[u][v]);
    CHECK(oracle_diam == 2);
    CHECK(graph_diameter(pet.graph) == 2);

    Graph split = Graph::undirected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(diameter_of_set(split, VertexSet::full(4)),
                         "infinite diameter: unreachable pair", std::invalid_argument);
}

TEST_CASE("ball growth") {
    Graph c10 = cycle(10);
    CHECK(ball_growth(c10, 0, 6) == std::vector<int>{1, 3, 5, 7, 9, 10, 10});

    GeneratedGraph t = make_family("torus", {9, 9});
    CHECK(ball_growth(t.graph, 4 * 9 + 4, 2) == std::vector<int>{1, 5, 13});

    GeneratedGraph tb = make_family("tree_ball", {3, 4});
    CHECK(ball_growth(tb.graph, 0, 2) == std::vector<int>{1, 4, 10});
}

TEST_CASE("connected with boundary") {
    Graph c12 = cycle(12);
    CHECK(check_connected_with_boundary(c12, VertexSet::of({0, 1, 2}, 12)));
    CHECK_FALSE(check_connected_with_boundary(c12, VertexSet::of({0, 1, 6, 7}, 12)));
    CHECK(check_connected_with_boundary(c12, VertexSet::of({0, 1, 3, 4}, 12)));
}

TEST_CASE("boundary size chain |bA| <= |dA| <= sum of degrees") {
    testutil::Rng rng(42);
    for (int round = 0; round < 200; ++round) {
        Graph g = testutil::random_graph(rng, 3 + rng.below(10), 40);
        VertexSet a = testutil::random_subset(rng, g.vertex_count(), 50);
        if (a.empty()) continue;
        BoundaryProfile p = boundary_profile(g, a);
        long long degsum = 0;
        for (int v : a) degsum += g.degree(v);
        CHECK(p.vertex_boundary.size() <= p.edge_cut_size);
        CHECK(p.edge_cut_size <= degsum);
    }
}

TEST_CASE("outer-region boundary stays inside the closure") {
    // With B = V minus (A and its boundary), every boundary vertex of B lies
    // in A or the boundary of A.
    testutil::Rng rng(61);
    for (int round = 0; round < 100; ++round) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(10), 45);
        VertexSet a = testutil::random_subset(rng, g.vertex_count(), 40);
        if (a.empty()) continue;
        VertexSet closure = set_union(a, boundary_profile(g, a).vertex_boundary);
        VertexSet outer = closure.complement();
        if (outer.empty()) continue;
        VertexSet outer_bd = boundary_profile(g, outer).vertex_boundary;
        CHECK(set_difference(outer_bd, closure).empty());
    }
}

TEST_CASE("depth 1 iff every vertex touches the complement") {
    testutil::Rng rng(7);
    for (int round = 0; round < 100; ++round) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(8), 50);
        VertexSet a = testutil::random_subset(rng, g.vertex_count(), 40);
        if (a.empty() || a.size() == g.vertex_count()) continue;
        int dep = 0;
        try {
            dep = depth(g, a);
        } catch (const std::invalid_argument&) {
            continue;  // some vertex cannot reach the complement
        }
        bool all_touch = true;
        std::vector<char> in_a = a.mask();
        for (int v : a) {
            bool touch = false;
            for (int w : g.neighbors(v))
                if (!in_a[w]) touch = true;
            all_touch = all_touch && touch;
        }
        CHECK((dep == 1) == all_touch);
    }
}

TEST_CASE("diameter is automorphism invariant") {
    GeneratedGraph c = make_circulant(12, {1, -1, 3, -3}, false);
    const Permutation& rot = c.transitivity_gens[0];
    testutil::Rng rng(11);
    for (int round = 0; round < 30; ++round) {
        VertexSet a = testutil::random_subset(rng, 12, 50);
        if (a.empty()) continue;
        CHECK(diameter_of_set(c.graph, a) == diameter_of_set(c.graph, rot.apply_to(a)));
    }
}

TEST_CASE("diam(A) < |bA| (2 depth(A) + 1) on connected-with-boundary sets") {
    testutil::Rng rng(23);
    int checked = 0;
    for (int round = 0; round < 400 && checked < 120; ++round) {
        Graph g = testutil::random_graph(rng, 5 + rng.below(8), 45);
        VertexSet a = testutil::random_subset(rng, g.vertex_count(), 45);
        if (a.empty() || a.size() == g.vertex_count()) continue;
        if (!check_connected_with_boundary(g, a)) continue;
        int dep, diam;
        try {
            dep = depth(g, a);
            diam = diameter_of_set(g, a);
        } catch (const std::invalid_argument&) {
            continue;
        }
        int bd = boundary_profile(g, a).vertex_boundary.size();
        CHECK(diam < bd * (2 * dep + 1));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("growth is monotone with bounded ratio") {
    testutil::Rng rng(5);
    for (int round = 0; round < 50; ++round) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(10), 50);
        auto b = ball_growth(g, rng.below(g.vertex_count()), 6);
        for (size_t k = 1; k < b.size(); ++k) {
            CHECK(b[k] >= b[k - 1]);
            CHECK(b[k] <= static_cast<long long>(b[k - 1]) * (1 + g.max_degree()));
        }
    }
}
