#include "vtsep/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace vtsep {

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
    std::vector<char> seen(image.size(), 0);
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || seen[v])
            throw std::invalid_argument("not a permutation of [0,n)");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image[v] != v) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(size());
    for (int v = 0; v < size(); ++v) img[v] = image[other.image[v]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int v = 0; v < size(); ++v) img[image[v]] = v;
    return Permutation(std::move(img));
}

VertexSet Permutation::apply_to(const VertexSet& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(apply(v));
    return VertexSet::from_unsorted(std::move(out), s.universe());
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    return !find_violated_edge(g, p).has_value();
}

std::optional<std::pair<int, int>> find_violated_edge(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) return std::make_pair(-1, -1);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.out_neighbors(u))
            if (!g.has_arc(p.apply(u), p.apply(v))) return std::make_pair(u, v);
    return std::nullopt;
}

// -------------------------------------------------------------- BlockSystem

BlockSystem BlockSystem::from_block_of(std::vector<int> block_of) {
    int n = static_cast<int>(block_of.size());
    std::vector<int> relabel(n, -1);
    int next = 0;
    std::vector<int> canonical(n);
    for (int v = 0; v < n; ++v) {
        int b = block_of[v];
        if (b < 0 || b >= n) throw std::invalid_argument("bad block index");
        if (relabel[b] == -1) relabel[b] = next++;
        canonical[v] = relabel[b];
    }
    BlockSystem sys;
    sys.block_of = std::move(canonical);
    sys.blocks.assign(next, VertexSet());
    std::vector<std::vector<int>> members(next);
    for (int v = 0; v < n; ++v) members[sys.block_of[v]].push_back(v);
    for (int b = 0; b < next; ++b) sys.blocks[b] = VertexSet(std::move(members[b]), n);
    return sys;
}

// ------------------------------------------------------- automorphism search

namespace {

struct AutSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> dist;  // all-pairs distances (-1 unreachable)
    std::vector<int> order;              // search order of domain vertices
    std::vector<int> image;              // partial map, -1 unset
    std::vector<char> used;
    long long node_limit;
    long long nodes = 0;
    std::vector<Permutation> found;

    explicit AutSearch(const Graph& graph, long long limit) : g(graph), n(graph.vertex_count()), node_limit(limit) {
        dist.reserve(n);
        for (int v = 0; v < n; ++v) {
            DistanceMap d = bfs_distances(g, std::vector<int>{v});
            std::vector<int> row(n);
            for (int w = 0; w < n; ++w) row[w] = d.get(w).value_or(-1);
            dist.push_back(std::move(row));
        }
        // High-degree vertices first narrows the branching early.
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        image.assign(n, -1);
        used.assign(n, 0);
    }

    bool compatible(int v, int w) const {
        if (g.degree(v) != g.degree(w)) return false;
        for (int u = 0; u < n; ++u) {
            if (image[u] == -1) continue;
            if (dist[v][u] != dist[w][image[u]]) return false;
        }
        return true;
    }

    void search(int idx) {
        if (++nodes > node_limit) throw BudgetError("search budget exhausted");
        if (idx == n) {
            found.emplace_back(image);
            return;
        }
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || !compatible(v, w)) continue;
            image[v] = w;
            used[w] = 1;
            search(idx + 1);
            image[v] = -1;
            used[w] = 0;
        }
    }
};

// Closure of a generator set under composition; capped to keep this usable
// only for the small groups the search is meant for.
std::vector<Permutation> group_closure(int n, const std::vector<Permutation>& gens, size_t cap) {
    std::set<std::vector<int>> seen;
    std::vector<Permutation> elems;
    std::queue<Permutation> work;
    Permutation id = Permutation::identity(n);
    seen.insert(id.image);
    elems.push_back(id);
    work.push(id);
    while (!work.empty()) {
        Permutation p = work.front();
        work.pop();
        for (const auto& gen : gens) {
            Permutation q = gen.compose(p);
            if (seen.insert(q.image).second) {
                elems.push_back(q);
                work.push(q);
                if (elems.size() > cap) throw BudgetError("group closure exceeded cap");
            }
        }
    }
    return elems;
}

}  // namespace

AutomorphismGroup find_automorphisms(const Graph& g, long long node_limit) {
    if (g.is_directed()) throw std::invalid_argument("automorphism search expects an undirected graph");
    AutSearch s(g, node_limit);
    s.search(0);
    AutomorphismGroup out;
    out.order = static_cast<long long>(s.found.size());
    // Greedy generating subset: keep an automorphism only if it enlarges the
    // generated group.
    std::set<std::vector<int>> have;
    have.insert(Permutation::identity(g.vertex_count()).image);
    for (const auto& p : s.found) {
        if (p.is_identity()) continue;
        if (have.count(p.image)) continue;
        out.generators.push_back(p);
        auto closure = group_closure(g.vertex_count(), out.generators, s.found.size());
        have.clear();
        for (const auto& q : closure) have.insert(q.image);
        if (static_cast<long long>(have.size()) == out.order) break;
    }
    return out;
}

// ------------------------------------------------------------------- orbits

OrbitResult orbit_transitivity(int n, const std::vector<Permutation>& gens, const Graph* g) {
    for (const auto& p : gens) {
        if (p.size() != n) throw std::invalid_argument("generator length does not match n");
        if (g) {
            if (auto bad = find_violated_edge(*g, p))
                throw std::invalid_argument("generator is not an automorphism: breaks edge " +
                                            std::to_string(bad->first) + "-" + std::to_string(bad->second));
        }
    }
    std::vector<char> visited(n, 0);
    OrbitResult res;
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        std::vector<int> orbit;
        std::vector<int> stack{s};
        visited[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            orbit.push_back(v);
            // Forward images suffice: forward-closed sets of a finite
            // permutation action are unions of orbits.
            for (const auto& p : gens) {
                int w = p.apply(v);
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        res.orbits.push_back(VertexSet(std::move(orbit), n));
    }
    res.transitive = res.orbits.size() == 1 && n > 0;
    return res;
}

// ------------------------------------------------------------ block systems

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

BlockSystem minimal_block_system(int n, const std::vector<Permutation>& gens, std::pair<int, int> seed) {
    auto orbits = orbit_transitivity(n, gens);
    if (!orbits.transitive) throw std::invalid_argument("action is not transitive");
    if (seed.first == seed.second) throw std::invalid_argument("seed vertices must be distinct");
    if (seed.first < 0 || seed.first >= n || seed.second < 0 || seed.second >= n)
        throw std::invalid_argument("seed vertex out of range");

    UnionFind uf(n);
    std::queue<std::pair<int, int>> work;
    uf.unite(seed.first, seed.second);
    work.emplace(seed.first, seed.second);
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop();
        for (const auto& p : gens) {
            int pa = p.apply(a), pb = p.apply(b);
            if (uf.unite(pa, pb)) work.emplace(pa, pb);
        }
    }
    std::vector<int> block_of(n);
    for (int v = 0; v < n; ++v) block_of[v] = uf.find(v);
    return BlockSystem::from_block_of(std::move(block_of));
}

std::vector<BlockSystem> enumerate_block_systems(int n, const std::vector<Permutation>& gens) {
    std::vector<BlockSystem> out;
    std::set<std::vector<int>> seen;
    auto add = [&](BlockSystem sys) {
        if (seen.insert(sys.block_of).second) out.push_back(std::move(sys));
    };
    std::vector<int> singleton(n);
    std::iota(singleton.begin(), singleton.end(), 0);
    add(BlockSystem::from_block_of(singleton));
    for (int v = 1; v < n; ++v) add(minimal_block_system(n, gens, {0, v}));
    add(BlockSystem::from_block_of(std::vector<int>(n, 0)));
    return out;
}

BlockSystem join_block_systems(const BlockSystem& a, const BlockSystem& b) {
    if (a.universe() != b.universe()) throw std::invalid_argument("block systems over different universes");
    int n = a.universe();
    UnionFind uf(n);
    for (const auto& blk : a.blocks)
        for (int i = 1; i < blk.size(); ++i) uf.unite(blk.ids()[0], blk.ids()[i]);
    for (const auto& blk : b.blocks)
        for (int i = 1; i < blk.size(); ++i) uf.unite(blk.ids()[0], blk.ids()[i]);
    std::vector<int> block_of(n);
    for (int v = 0; v < n; ++v) block_of[v] = uf.find(v);
    return BlockSystem::from_block_of(std::move(block_of));
}

std::vector<Permutation> induced_block_action(const BlockSystem& sys, const std::vector<Permutation>& gens) {
    std::vector<Permutation> out;
    out.reserve(gens.size());
    for (const auto& p : gens) {
        std::vector<int> img(sys.block_count(), -1);
        for (int v = 0; v < sys.universe(); ++v) {
            int from = sys.block_of[v];
            int to = sys.block_of[p.apply(v)];
            if (img[from] == -1) {
                img[from] = to;
            } else if (img[from] != to) {
                throw std::invalid_argument("generator does not map block " + std::to_string(from) +
                                            " onto a single block");
            }
        }
        out.emplace_back(std::move(img));
    }
    return out;
}

Graph quotient_graph(const Graph& g, const BlockSystem& sys) {
    if (sys.universe() != g.vertex_count()) throw std::invalid_argument("block system does not match graph");
    std::set<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            int bu = sys.block_of[u], bv = sys.block_of[v];
            if (bu == bv) continue;
            edges.insert({std::min(bu, bv), std::max(bu, bv)});
        }
    }
    return Graph::undirected(sys.block_count(), {edges.begin(), edges.end()});
}

}  // namespace vtsep
