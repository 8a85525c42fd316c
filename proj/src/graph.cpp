#include "vtsep/graph.hpp"

#include <algorithm>
#include <queue>

namespace vtsep {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::vector<int> ids, int universe) : ids_(std::move(ids)), universe_(universe) {
    if (universe < 0) throw std::invalid_argument("negative universe");
    for (size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] < 0 || ids_[i] >= universe_)
            throw std::invalid_argument("vertex id " + std::to_string(ids_[i]) + " out of range [0," +
                                        std::to_string(universe_) + ")");
        if (i > 0 && ids_[i] <= ids_[i - 1])
            throw std::invalid_argument("vertex set ids must be strictly increasing");
    }
}

VertexSet VertexSet::full(int universe) {
    std::vector<int> ids(universe);
    for (int i = 0; i < universe; ++i) ids[i] = i;
    return VertexSet(std::move(ids), universe);
}

VertexSet VertexSet::of(std::initializer_list<int> ids, int universe) {
    return from_unsorted(std::vector<int>(ids), universe);
}

VertexSet VertexSet::from_unsorted(std::vector<int> ids, int universe) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return VertexSet(std::move(ids), universe);
}

VertexSet VertexSet::from_mask(const std::vector<char>& mask) {
    std::vector<int> ids;
    for (size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) ids.push_back(static_cast<int>(v));
    return VertexSet(std::move(ids), static_cast<int>(mask.size()));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<char> VertexSet::mask() const {
    std::vector<char> m(universe_, 0);
    for (int v : ids_) m[v] = 1;
    return m;
}

VertexSet VertexSet::complement() const {
    std::vector<int> out;
    out.reserve(universe_ - size());
    size_t i = 0;
    for (int v = 0; v < universe_; ++v) {
        if (i < ids_.size() && ids_[i] == v) {
            ++i;
        } else {
            out.push_back(v);
        }
    }
    return VertexSet(std::move(out), universe_);
}

static void require_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe()) throw std::invalid_argument("vertex sets over different universes");
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out), a.universe());
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out), a.universe());
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out), a.universe());
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    return set_intersection(a, b).empty();
}

// -------------------------------------------------------------------- Graph

static void sort_check_lists(std::vector<std::vector<int>>& lists, const char* what) {
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw std::invalid_argument(std::string("duplicate ") + what);
    }
}

Graph Graph::undirected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.directed_ = false;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    sort_check_lists(g.adj_, "edge");
    g.edge_count_ = static_cast<long long>(edges.size());
    return g;
}

Graph Graph::directed(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.directed_ = true;
    g.adj_.assign(n, {});
    g.radj_.assign(n, {});
    g.und_adj_.assign(n, {});
    for (auto [u, v] : arcs) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.radj_[v].push_back(u);
    }
    sort_check_lists(g.adj_, "arc");
    sort_check_lists(g.radj_, "arc");
    for (int v = 0; v < n; ++v) {
        std::vector<int> u;
        std::set_union(g.adj_[v].begin(), g.adj_[v].end(), g.radj_[v].begin(), g.radj_[v].end(),
                       std::back_inserter(u));
        g.und_adj_[v] = std::move(u);
    }
    g.edge_count_ = static_cast<long long>(arcs.size());
    return g;
}

bool Graph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& l = adj_[u];
    return std::binary_search(l.begin(), l.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

Graph Graph::underlying_undirected() const {
    if (!directed_) return *this;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u)
        for (int v : und_adj_[u])
            if (u < v) edges.emplace_back(u, v);
    return undirected(n_, edges);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (directed_ || u < v) out.emplace_back(u, v);
    return out;
}

// -------------------------------------------------------------- DistanceMap

bool DistanceMap::all_reached() const {
    for (int d : dist_)
        if (d < 0) return false;
    return true;
}

int DistanceMap::max_reached() const {
    int m = 0;
    for (int d : dist_) m = std::max(m, d);
    return m;
}

// --------------------------------------------------------------- operations

static std::vector<int> bfs_raw(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int s : sources) {
        g.check_vertex(s);
        if (dist[s] == -1) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.out_neighbors(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

DistanceMap bfs_distances(const Graph& g, const std::vector<int>& sources) {
    if (sources.empty()) throw std::invalid_argument("empty source");
    return DistanceMap(bfs_raw(g, sources));
}

DistanceMap bfs_distances(const Graph& g, const VertexSet& sources) {
    if (sources.universe() != g.vertex_count())
        throw std::invalid_argument("source set universe does not match graph");
    return bfs_distances(g, sources.ids());
}

BoundaryProfile boundary_profile(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe does not match graph");
    std::vector<char> in_a = a.mask();
    BoundaryProfile p;
    if (!g.is_directed()) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> bd;
        long long cut = 0;
        for (int u : a) {
            for (int v : g.out_neighbors(u)) {
                if (!in_a[v]) {
                    ++cut;
                    if (!seen[v]) {
                        seen[v] = 1;
                        bd.push_back(v);
                    }
                }
            }
        }
        std::sort(bd.begin(), bd.end());
        p.vertex_boundary = VertexSet(bd, g.vertex_count());
        p.out_boundary = p.vertex_boundary;
        p.in_boundary = p.vertex_boundary;
        p.edge_cut_size = cut;
        return p;
    }
    std::vector<char> seen_out(g.vertex_count(), 0), seen_in(g.vertex_count(), 0);
    std::vector<int> out_bd, in_bd;
    long long cut = 0;
    for (int u : a) {
        for (int v : g.out_neighbors(u)) {
            if (!in_a[v]) {
                ++cut;
                if (!seen_out[v]) {
                    seen_out[v] = 1;
                    out_bd.push_back(v);
                }
            }
        }
        for (int v : g.in_neighbors(u)) {
            if (!in_a[v]) {
                ++cut;
                if (!seen_in[v]) {
                    seen_in[v] = 1;
                    in_bd.push_back(v);
                }
            }
        }
    }
    std::sort(out_bd.begin(), out_bd.end());
    std::sort(in_bd.begin(), in_bd.end());
    p.out_boundary = VertexSet(out_bd, g.vertex_count());
    p.in_boundary = VertexSet(in_bd, g.vertex_count());
    p.vertex_boundary = set_union(p.out_boundary, p.in_boundary);
    p.edge_cut_size = cut;
    return p;
}

long long delta_out_size(const Graph& g, const VertexSet& a) {
    std::vector<char> in_a = a.mask();
    long long cut = 0;
    for (int u : a)
        for (int v : g.out_neighbors(u))
            if (!in_a[v]) ++cut;
    return cut;
}

long long delta_in_size(const Graph& g, const VertexSet& a) {
    std::vector<char> in_a = a.mask();
    long long cut = 0;
    for (int u : a)
        for (int v : g.in_neighbors(u))
            if (!in_a[v]) ++cut;
    return cut;
}

int depth(const Graph& g, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("depth undefined for the empty set");
    if (a.size() == g.vertex_count()) throw std::invalid_argument("depth undefined for the full vertex set");
    VertexSet comp = a.complement();
    DistanceMap d = bfs_distances(g.is_directed() ? g.underlying_undirected() : g, comp);
    int best = 0;
    for (int v : a) {
        if (!d.reached(v))
            throw std::invalid_argument("depth is infinite: vertex " + std::to_string(v) +
                                        " cannot reach the complement");
        best = std::max(best, d.at(v));
    }
    return best;
}

int diameter_of_set(const Graph& g, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("diameter of empty set");
    const Graph& h = g.is_directed() ? g.underlying_undirected() : g;
    int best = 0;
    for (int x : a) {
        DistanceMap d = bfs_distances(h, std::vector<int>{x});
        for (int y : a) {
            if (!d.reached(y)) throw std::invalid_argument("infinite diameter: unreachable pair");
            best = std::max(best, d.at(y));
        }
    }
    return best;
}

int graph_diameter(const Graph& g) {
    return diameter_of_set(g, VertexSet::full(g.vertex_count()));
}

std::vector<int> ball_growth(const Graph& g, int x, int kmax) {
    g.check_vertex(x);
    if (kmax < 0) throw std::invalid_argument("negative radius");
    const Graph& h = g.is_directed() ? g.underlying_undirected() : g;
    DistanceMap d = bfs_distances(h, std::vector<int>{x});
    std::vector<int> b(kmax + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dv = d.get(v);
        if (dv && *dv <= kmax) ++b[*dv];
    }
    for (int k = 1; k <= kmax; ++k) b[k] += b[k - 1];
    return b;
}

VertexSet ball(const Graph& g, int x, int radius) {
    const Graph& h = g.is_directed() ? g.underlying_undirected() : g;
    DistanceMap d = bfs_distances(h, std::vector<int>{x});
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dv = d.get(v);
        if (dv && *dv <= radius) ids.push_back(v);
    }
    return VertexSet(std::move(ids), g.vertex_count());
}

bool check_connected_with_boundary(const Graph& g, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("empty set");
    const Graph& h = g.is_directed() ? g.underlying_undirected() : g;
    VertexSet closure = set_union(a, boundary_profile(h, a).vertex_boundary);
    auto comps = components_of_subset(h, closure.mask());
    return comps.size() == 1;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return connected_components(g).size() == 1;
}

std::vector<std::vector<int>> components_of_subset(const Graph& g, const std::vector<char>& keep) {
    if (static_cast<int>(keep.size()) != g.vertex_count())
        throw std::invalid_argument("keep mask size does not match graph");
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!keep[s] || visited[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        visited[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (keep[w] && !visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return components_of_subset(g, std::vector<char>(g.vertex_count(), 1));
}

}  // namespace vtsep
