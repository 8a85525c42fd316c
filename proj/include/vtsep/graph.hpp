#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vtsep {

// Thrown when a guarded search exceeds its node/window budget.  Callers that
// want to distinguish "gave up" from "checked and failed" catch this type.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sorted set of distinct vertex ids over a fixed universe [0, universe).
class VertexSet {
public:
    VertexSet() = default;

    /// ids must be strictly increasing and within [0, universe).
    VertexSet(std::vector<int> ids, int universe);

    static VertexSet empty_set(int universe) { return VertexSet({}, universe); }
    static VertexSet full(int universe);
    static VertexSet of(std::initializer_list<int> ids, int universe);
    /// Sorts and deduplicates before validating the range.
    static VertexSet from_unsorted(std::vector<int> ids, int universe);
    static VertexSet from_mask(const std::vector<char>& mask);

    int universe() const { return universe_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const;
    const std::vector<int>& ids() const { return ids_; }
    std::vector<char> mask() const;
    VertexSet complement() const;

    bool operator==(const VertexSet&) const = default;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

private:
    std::vector<int> ids_;
    int universe_ = 0;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);

/// Finite simple graph or digraph with sorted adjacency lists.  Undirected
/// graphs store each edge in both endpoint lists.  Immutable after
/// construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    static Graph undirected(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph directed(int n, const std::vector<std::pair<int, int>>& arcs);

    int vertex_count() const { return n_; }
    bool is_directed() const { return directed_; }
    /// Number of undirected edges, or arcs for a digraph.
    long long edge_count() const { return edge_count_; }

    const std::vector<int>& out_neighbors(int v) const { check_vertex(v); return adj_[v]; }
    const std::vector<int>& in_neighbors(int v) const { check_vertex(v); return directed_ ? radj_[v] : adj_[v]; }
    /// Neighbors in the undirected sense (union of in/out for digraphs).
    const std::vector<int>& neighbors(int v) const { check_vertex(v); return directed_ ? und_adj_[v] : adj_[v]; }

    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_arc(int u, int v) const;

    int max_degree() const;
    /// Common degree if the graph is regular (undirected sense).
    std::optional<int> regular_degree() const;

    Graph underlying_undirected() const;
    /// Canonical edge list: u < v for undirected, arcs as stored for digraphs.
    std::vector<std::pair<int, int>> edge_list() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    bool directed_ = false;
    long long edge_count_ = 0;
    std::vector<std::vector<int>> adj_;      // out-neighbors
    std::vector<std::vector<int>> radj_;     // in-neighbors (digraphs only)
    std::vector<std::vector<int>> und_adj_;  // undirected neighborhoods (digraphs only)
};

/// BFS distances with unreachable kept distinct from any integer value.
class DistanceMap {
public:
    explicit DistanceMap(std::vector<int> dist) : dist_(std::move(dist)) {}

    bool reached(int v) const { return dist_.at(v) >= 0; }
    /// Distance to v; throws if v was not reached.
    int at(int v) const {
        int d = dist_.at(v);
        if (d < 0) throw std::logic_error("distance queried for unreachable vertex " + std::to_string(v));
        return d;
    }
    std::optional<int> get(int v) const {
        int d = dist_.at(v);
        return d < 0 ? std::nullopt : std::optional<int>(d);
    }
    int size() const { return static_cast<int>(dist_.size()); }
    bool all_reached() const;
    int max_reached() const;

private:
    std::vector<int> dist_;
};

/// Boundary data of a vertex set.  For undirected graphs out/in boundaries
/// coincide with the vertex boundary; for digraphs edge_cut_size counts arcs
/// crossing in either direction.
struct BoundaryProfile {
    VertexSet vertex_boundary;
    VertexSet out_boundary;
    VertexSet in_boundary;
    long long edge_cut_size = 0;
};

/// Multi-source shortest-path distances (arc directions followed on digraphs).
DistanceMap bfs_distances(const Graph& g, const VertexSet& sources);
DistanceMap bfs_distances(const Graph& g, const std::vector<int>& sources);

BoundaryProfile boundary_profile(const Graph& g, const VertexSet& a);

/// |delta^+ A| for digraphs: arcs leaving A.
long long delta_out_size(const Graph& g, const VertexSet& a);
/// |delta^- A| for digraphs: arcs entering A.
long long delta_in_size(const Graph& g, const VertexSet& a);

/// max over v in A of dist(v, V \ A).  A must be a nonempty proper subset.
int depth(const Graph& g, const VertexSet& a);

/// max over x,y in A of dist_G(x,y), measured in the whole graph.
int diameter_of_set(const Graph& g, const VertexSet& a);

int graph_diameter(const Graph& g);

/// [b(0), ..., b(kmax)] where b(k) = |B(x,k)|.
std::vector<int> ball_growth(const Graph& g, int x, int kmax);

VertexSet ball(const Graph& g, int x, int radius);

/// True iff the subgraph induced on A and its boundary is connected.
bool check_connected_with_boundary(const Graph& g, const VertexSet& a);

bool is_connected(const Graph& g);

/// Connected components of the subgraph induced on vertices with keep[v] != 0.
std::vector<std::vector<int>> components_of_subset(const Graph& g, const std::vector<char>& keep);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace vtsep
