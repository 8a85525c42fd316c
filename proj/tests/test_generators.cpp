#include <set>

#include "doctest.h"
#include "testutil.hpp"
#include "vtsep/generators.hpp"
#include "vtsep/symmetry.hpp"

using namespace vtsep;

TEST_CASE("group tables") {
    GroupTable z5 = GroupTable::cyclic(5);
    CHECK(z5.identity() == 0);
    CHECK(z5.mul(3, 4) == 2);
    CHECK(z5.inv(2) == 3);

    GroupTable s3 = GroupTable::symmetric(3);
    CHECK(s3.order() == 6);

    // A non-associative "table" must be rejected.
    std::vector<int> bad = {0, 1, 2, 1, 0, 0, 2, 0, 0};
    CHECK_THROWS_AS(GroupTable(3, bad), std::invalid_argument);
}

TEST_CASE("circulants") {
    GeneratedGraph c6 = make_circulant(6, {1, -1}, false);
    CHECK(c6.graph.vertex_count() == 6);
    CHECK(c6.graph.edge_count() == 6);
    CHECK(c6.graph.regular_degree() == 2);

    GeneratedGraph c8 = make_circulant(8, {1, -1, 2, -2}, false);
    CHECK(c8.graph.edge_count() == 16);
    CHECK(c8.graph.regular_degree() == 4);

    GeneratedGraph z7 = make_circulant(7, {1, 2}, true);
    for (int v = 0; v < 7; ++v) {
        CHECK(z7.graph.out_degree(v) == 2);
        CHECK(z7.graph.in_degree(v) == 2);
    }

    CHECK_THROWS_AS(make_circulant(8, {1, 2}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_circulant(8, {8}, false), std::invalid_argument);

    auto orb = orbit_transitivity(6, c6.transitivity_gens, &c6.graph);
    CHECK(orb.transitive);
}

TEST_CASE("cayley graphs") {
    GeneratedGraph c5 = make_cayley(GroupTable::cyclic(5), {1, 4}, false);
    CHECK(c5.graph.vertex_count() == 5);
    CHECK(c5.graph.regular_degree() == 2);
    CHECK(is_connected(c5.graph));

    // S_3 with all transpositions: 3-regular bipartite on parity classes with
    // every cross pair adjacent (product of a transposition and any element of
    // opposite parity is a transposition).
    GroupTable s3 = GroupTable::symmetric(3);
    std::vector<int> transpositions;
    for (int x = 0; x < 6; ++x)
        if (x != s3.identity() && s3.mul(x, x) == s3.identity()) transpositions.push_back(x);
    CHECK(transpositions.size() == 3);
    GeneratedGraph cg = make_cayley(s3, transpositions, false);
    CHECK(cg.graph.vertex_count() == 6);
    CHECK(cg.graph.regular_degree() == 3);
    CHECK(is_connected(cg.graph));
    CHECK(cg.graph.edge_count() == 9);
    for (int t : transpositions)
        for (int u : transpositions)
            if (t != u) CHECK(cg.graph.has_arc(t, u) == false);

    CHECK_THROWS_AS(make_cayley(s3, {s3.identity()}, false), std::invalid_argument);
    auto orb = orbit_transitivity(6, cg.transitivity_gens, &cg.graph);
    CHECK(orb.transitive);
}

TEST_CASE("families") {
    GeneratedGraph prism6 = make_family("prism", {6});
    CHECK(prism6.graph.vertex_count() == 12);
    CHECK(prism6.graph.edge_count() == 18);
    CHECK(prism6.graph.regular_degree() == 3);

    GeneratedGraph torus44 = make_family("torus", {4, 4});
    CHECK(torus44.graph.vertex_count() == 16);
    CHECK(torus44.graph.regular_degree() == 4);

    GeneratedGraph tb = make_family("tree_ball", {3, 2});
    CHECK(tb.graph.vertex_count() == 10);
    CHECK(tb.frontier.size() == 6);

    CHECK_THROWS_AS(make_family("prism", {2}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("nonesuch", {}), std::invalid_argument);

    for (int n : {4, 7, 10}) {
        GeneratedGraph p = make_family("prism", {n});
        CHECK(p.graph.edge_count() == 3 * n);
        CHECK(p.graph.regular_degree() == 3);
        CHECK(orbit_transitivity(2 * n, p.transitivity_gens, &p.graph).transitive);
    }
}

TEST_CASE("periodic presentations") {
    PeriodicPresentation ladder = ladder_presentation();
    CHECK(ladder.cell.vertex_count() == 2);
    CHECK(ladder.jumps.size() == 2);

    CHECK_THROWS_AS(make_periodic(2, {}, {{0, 1, 0}}), std::invalid_argument);
    // (0,1,1) and (1,0,-1) normalize to the same jump.
    CHECK_THROWS_AS(make_periodic(2, {}, {{0, 1, 1}, {1, 0, -1}}), std::invalid_argument);
}

TEST_CASE("windows") {
    WindowGraph lw = window(ladder_presentation(), 5);
    CHECK(lw.graph.vertex_count() == 22);
    CHECK(lw.frontier.size() == 4);
    for (int v : lw.frontier) CHECK(std::abs(lw.layer_of[v]) == 5);

    WindowGraph pw = window(path_presentation(), 3);
    CHECK(pw.graph.vertex_count() == 7);
    CHECK(pw.graph.edge_count() == 6);
    CHECK(pw.frontier.size() == 2);

    WindowGraph sq = window(squared_path_presentation(), 3);
    std::set<int> frontier_layers;
    for (int v : sq.frontier) frontier_layers.insert(sq.layer_of[v]);
    CHECK(frontier_layers == std::set<int>{-3, -2, 2, 3});

    // window(L) is an induced subgraph of window(L+1) under the layer
    // relabeling: edges map to edges and no new adjacency appears between
    // relabeled vertices.
    PeriodicPresentation fig = figure2_presentation();
    WindowGraph w4 = window(fig, 4);
    WindowGraph w5 = window(fig, 5);
    for (auto [x, y] : w4.graph.edge_list()) {
        int xb = w5.vertex_id(w4.cell_of[x], w4.layer_of[x]);
        int yb = w5.vertex_id(w4.cell_of[y], w4.layer_of[y]);
        CHECK(w5.graph.has_arc(xb, yb));
    }
    for (int x = 0; x < w4.graph.vertex_count(); ++x)
        for (int y = x + 1; y < w4.graph.vertex_count(); ++y) {
            int xb = w5.vertex_id(w4.cell_of[x], w4.layer_of[x]);
            int yb = w5.vertex_id(w4.cell_of[y], w4.layer_of[y]);
            CHECK(w4.graph.has_arc(x, y) == w5.graph.has_arc(xb, yb));
        }

    // Interior degrees equal cell degree plus jump multiplicity.
    int expected = fig.cell.degree(0) + 3;  // each strand meets three jump arcs
    for (int v = 0; v < w5.graph.vertex_count(); ++v)
        if (w5.interior(v)) CHECK(w5.graph.degree(v) == expected);
}

TEST_CASE("figure2 evidence: translations keep two strand orbits") {
    PeriodicPresentation fig = figure2_presentation();
    auto ev = standard_evidence(fig, "figure2");
    EndClassification ec = classify_ends(fig, ev);
    CHECK(ec.type == 2);
    CHECK(ec.shift_count == 1);
    CHECK(ec.reflection_count == 1);

    auto lad_ev = standard_evidence(ladder_presentation(), "ladder");
    EndClassification lec = classify_ends(ladder_presentation(), lad_ev);
    CHECK(lec.type == 1);
}

TEST_CASE("figure2 window admits no end-fixing strand swap") {
    // Every automorphism of a symmetric window either fixes both frontier
    // sides setwise (end-fixing) or swaps them.  The triangle strip's
    // drawing promises: end-fixing automorphisms never swap strands, and a
    // strand swap exists but reverses the ends.
    WindowGraph w = window(figure2_presentation(), 4);
    AutomorphismGroup aut = find_automorphisms(w.graph);
    bool saw_reversing_swap = false;
    for (const auto& p : aut.generators) {
        // Strand of vertex = cell_of (0 top, 1 bottom).
        bool swaps = false, fixes_layers = true;
        for (int v = 0; v < w.graph.vertex_count(); ++v) {
            int img = p.apply(v);
            if (w.cell_of[img] != w.cell_of[v]) swaps = true;
            if (w.layer_of[img] != w.layer_of[v]) fixes_layers = false;
        }
        bool reverses = true;
        for (int v = 0; v < w.graph.vertex_count(); ++v)
            if (w.layer_of[p.apply(v)] != -w.layer_of[v]) reverses = false;
        if (swaps) {
            CHECK(!fixes_layers);
            CHECK(reverses);  // the half-turn
            saw_reversing_swap = true;
        }
    }
    CHECK(saw_reversing_swap);
    CHECK(aut.order == 2);  // identity and the half-turn only
}
