#include "vtsep/tubes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace vtsep {

namespace {

// Pairwise distances between the members of a set, via one BFS per member.
std::vector<std::vector<int>> pairwise_distances(const Graph& g, const std::vector<int>& pts) {
    std::vector<std::vector<int>> d(pts.size(), std::vector<int>(pts.size(), -1));
    for (size_t i = 0; i < pts.size(); ++i) {
        DistanceMap dm = bfs_distances(g, std::vector<int>{pts[i]});
        for (size_t j = 0; j < pts.size(); ++j) d[i][j] = dm.get(pts[j]).value_or(-1);
    }
    return d;
}

int set_metric_diameter(const std::vector<std::vector<int>>& d, const std::vector<int>& idx) {
    int best = 0;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            int dij = d[idx[i]][idx[j]];
            if (dij < 0) return std::numeric_limits<int>::max();
            best = std::max(best, dij);
        }
    return best;
}

int cross_min_distance(const std::vector<std::vector<int>>& d, const std::vector<int>& a,
                       const std::vector<int>& b) {
    int best = std::numeric_limits<int>::max();
    for (int i : a)
        for (int j : b) {
            int dij = d[i][j];
            if (dij >= 0) best = std::min(best, dij);
        }
    return best;
}

}  // namespace

TubeCertificate verify_tube(const Graph& g, const VertexSet& a, const VertexSet& l, const VertexSet& r,
                            int s, int t) {
    if (g.is_directed()) throw std::invalid_argument("tube verification expects an undirected graph");
    if (l.empty() || r.empty()) throw std::invalid_argument("empty side in boundary partition");
    VertexSet bd = boundary_profile(g, a).vertex_boundary;
    if (!sets_disjoint(l, r) || set_union(l, r) != bd)
        throw std::invalid_argument("{L, R} does not partition the boundary of A");
    if (!check_connected_with_boundary(g, a))
        throw std::invalid_argument("G[A ∪ ∂A] is not connected");

    for (const VertexSet* side : {&l, &r}) {
        const auto& ids = side->ids();
        for (size_t i = 0; i < ids.size(); ++i) {
            DistanceMap dm = bfs_distances(g, std::vector<int>{ids[i]});
            for (size_t j = i + 1; j < ids.size(); ++j) {
                auto d = dm.get(ids[j]);
                if (!d || *d > s)
                    throw std::invalid_argument("side diameter exceeds s: vertices " + std::to_string(ids[i]) +
                                                " and " + std::to_string(ids[j]));
            }
        }
    }
    for (int u : l) {
        DistanceMap dm = bfs_distances(g, std::vector<int>{u});
        for (int v : r) {
            auto d = dm.get(v);
            if (d && *d < t)
                throw std::invalid_argument("cross distance below t: vertices " + std::to_string(u) + " and " +
                                            std::to_string(v));
        }
    }
    return TubeCertificate{a, l, r, s, t};
}

std::optional<std::pair<VertexSet, VertexSet>> find_boundary_partition(const Graph& g, const VertexSet& a,
                                                                       int s, int t) {
    VertexSet bd = boundary_profile(g, a).vertex_boundary;
    if (bd.empty()) throw std::invalid_argument("boundary of A is empty");
    if (bd.size() < 2) return std::nullopt;

    std::vector<int> pts = bd.ids();
    auto d = pairwise_distances(g, pts);
    int m = static_cast<int>(pts.size());

    // Single-linkage at threshold s.
    std::vector<int> cluster(m);
    std::iota(cluster.begin(), cluster.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (cluster[v] != v) v = cluster[v] = cluster[cluster[v]];
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (d[i][j] >= 0 && d[i][j] <= s) cluster[find(i)] = find(j);

    std::vector<std::vector<int>> groups;
    {
        std::vector<int> label(m, -1);
        for (int i = 0; i < m; ++i) {
            int r = find(i);
            if (label[r] == -1) {
                label[r] = static_cast<int>(groups.size());
                groups.emplace_back();
            }
            groups[label[r]].push_back(i);
        }
    }
    if (groups.size() < 2) return std::nullopt;

    // More than two clusters: greedily combine the closest pair until two
    // remain, then validate.
    while (groups.size() > 2) {
        size_t bi = 0, bj = 1;
        int best = std::numeric_limits<int>::max();
        for (size_t i = 0; i < groups.size(); ++i)
            for (size_t j = i + 1; j < groups.size(); ++j) {
                int c = cross_min_distance(d, groups[i], groups[j]);
                if (c < best) {
                    best = c;
                    bi = i;
                    bj = j;
                }
            }
        groups[bi].insert(groups[bi].end(), groups[bj].begin(), groups[bj].end());
        groups.erase(groups.begin() + bj);
    }

    if (set_metric_diameter(d, groups[0]) > s || set_metric_diameter(d, groups[1]) > s) return std::nullopt;
    if (cross_min_distance(d, groups[0], groups[1]) < t) return std::nullopt;

    auto to_set = [&](const std::vector<int>& idx) {
        std::vector<int> ids;
        for (int i : idx) ids.push_back(pts[i]);
        return VertexSet::from_unsorted(std::move(ids), g.vertex_count());
    };
    return std::make_pair(to_set(groups[0]), to_set(groups[1]));
}

MergeReport merge_status(const Graph& g, const TubeCertificate& c1, const TubeCertificate& c2) {
    MergeReport rep;
    rep.reg = regions(g, c1.A, c2.A);
    const RegionDecomposition& r = rep.reg;
    rep.p_nonempty = !r.P.empty();
    rep.s_nonempty = !r.S.empty();
    rep.x_nonempty = !r.X.empty();
    rep.z_nonempty = !r.Z.empty();
    rep.u_empty = r.U.empty();
    auto pair_matches = [](const VertexSet& a, const VertexSet& b, const VertexSet& l, const VertexSet& rr) {
        return (a == l && b == rr) || (a == rr && b == l);
    };
    rep.sides1_match = pair_matches(r.Q, r.Y, c1.L, c1.R);
    rep.sides2_match = pair_matches(r.T, r.W, c2.L, c2.R);
    rep.merges = rep.p_nonempty && rep.s_nonempty && rep.x_nonempty && rep.z_nonempty && rep.sides1_match &&
                 rep.sides2_match;
    return rep;
}

TubeCertificate merge_tubes(const Graph& g, const TubeCertificate& c1, const TubeCertificate& c2) {
    MergeReport rep = merge_status(g, c1, c2);
    if (!rep.merges) throw std::invalid_argument("tubes do not merge");
    const RegionDecomposition& r = rep.reg;
    VertexSet merged = set_union(set_union(set_union(r.P, r.Q), set_union(r.S, r.T)), r.X);

    // Tight parameters for the new boundary partition {Y, W}.
    std::vector<int> pts;
    pts.insert(pts.end(), r.Y.begin(), r.Y.end());
    pts.insert(pts.end(), r.W.begin(), r.W.end());
    auto d = pairwise_distances(g, pts);
    std::vector<int> yi(r.Y.size()), wi(r.W.size());
    std::iota(yi.begin(), yi.end(), 0);
    std::iota(wi.begin(), wi.end(), r.Y.size());
    int s = std::max(set_metric_diameter(d, yi), set_metric_diameter(d, wi));
    int t = cross_min_distance(d, yi, wi);
    return verify_tube(g, merged, r.Y, r.W, s, t);
}

BalloonReport balloon_check(const Graph& g, const VertexSet& x, int y, int k,
                            const VertexSet* frontier) {
    if (x.empty()) throw std::invalid_argument("empty cut gives no separation");
    g.check_vertex(y);
    DistanceMap from_y = bfs_distances(g, std::vector<int>{y});
    for (int v : x) {
        auto d = from_y.get(v);
        if (!d || *d > k)
            throw std::invalid_argument("cut vertex " + std::to_string(v) + " is farther than " +
                                        std::to_string(k) + " from the center");
    }
    std::vector<char> keep = x.complement().mask();
    BalloonReport rep;
    for (const auto& comp : components_of_subset(g, keep)) {
        VertexSet cs(comp, g.vertex_count());
        bool truncated = frontier && !sets_disjoint(cs, *frontier);
        rep.component_sets.push_back(cs);
        rep.component_depths.push_back(depth(g, cs));
        rep.touches_frontier.push_back(truncated ? 1 : 0);
    }
    for (size_t i = 0; i < rep.component_depths.size(); ++i)
        if (!rep.touches_frontier[i] && rep.component_depths[i] >= k + 2) ++rep.deep_count;
    rep.at_most_one_deep = rep.deep_count <= 1;
    return rep;
}

}  // namespace vtsep
