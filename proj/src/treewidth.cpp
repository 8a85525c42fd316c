#include "vtsep/treewidth.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace vtsep {

// ------------------------------------------------------------- verification

int verify_td(const Graph& g, const TreeDecomposition& td) {
    int b = td.tree.vertex_count();
    if (td.tree.is_directed()) throw std::invalid_argument("decomposition tree must be undirected");
    if (static_cast<int>(td.bags.size()) != b)
        throw std::invalid_argument("bag count does not match tree node count");
    if (b == 0) throw std::invalid_argument("empty decomposition tree");
    if (td.tree.edge_count() != b - 1 || !is_connected(td.tree))
        throw std::invalid_argument("decomposition tree is not a tree");

    int n = g.vertex_count();
    std::vector<std::vector<int>> nodes_of(n);
    int width = -1;
    for (int t = 0; t < b; ++t) {
        if (td.bags[t].universe() != n) throw std::invalid_argument("bag universe does not match graph");
        width = std::max(width, td.bags[t].size() - 1);
        for (int v : td.bags[t]) nodes_of[v].push_back(t);
    }

    for (int v = 0; v < n; ++v) {
        if (nodes_of[v].empty())
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no bag");
        // Subtree connectivity: BFS within the nodes holding v.
        std::vector<char> in_set(b, 0), visited(b, 0);
        for (int t : nodes_of[v]) in_set[t] = 1;
        std::vector<int> stack{nodes_of[v][0]};
        visited[nodes_of[v][0]] = 1;
        int seen = 0;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            ++seen;
            for (int s : td.tree.neighbors(t))
                if (in_set[s] && !visited[s]) {
                    visited[s] = 1;
                    stack.push_back(s);
                }
        }
        if (seen != static_cast<int>(nodes_of[v].size()))
            throw std::invalid_argument("subtree of vertex " + std::to_string(v) + " is disconnected");
    }

    for (auto [u, v] : g.underlying_undirected().edge_list()) {
        bool covered = false;
        for (int t : nodes_of[u])
            if (td.bags[t].contains(v)) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered");
    }
    return width;
}

// ------------------------------------------------------- balanced separator

namespace {

struct MutableTree {
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
    std::vector<std::vector<char>> bag;  // bag masks over V(g)

    int alive_count() const {
        int c = 0;
        for (char a : alive) c += a;
        return c;
    }
};

bool subset(const std::vector<char>& a, const std::vector<char>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

}  // namespace

VertexSet balanced_separator(const Graph& g, const TreeDecomposition& td, const VertexSet& w, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int width = verify_td(g, td);
    if (width >= k) throw std::invalid_argument("decomposition width must be less than k");
    if (w.universe() != g.vertex_count()) throw std::invalid_argument("weight set universe mismatch");
    int n = g.vertex_count();
    if (w.empty()) return VertexSet::empty_set(n);

    // Minimality preprocessing: contract tree edges with nested bags.
    MutableTree mt;
    int b = td.tree.vertex_count();
    mt.adj.resize(b);
    mt.alive.assign(b, 1);
    for (int t = 0; t < b; ++t) {
        mt.bag.push_back(td.bags[t].mask());
        for (int s : td.tree.neighbors(t)) mt.adj[t].insert(s);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < b && !changed; ++t) {
            if (!mt.alive[t]) continue;
            for (int s : mt.adj[t]) {
                if (subset(mt.bag[t], mt.bag[s])) {
                    // Contract t into s.
                    for (int x : mt.adj[t]) {
                        if (x == s) continue;
                        mt.adj[x].erase(t);
                        mt.adj[x].insert(s);
                        mt.adj[s].insert(x);
                    }
                    mt.adj[s].erase(t);
                    mt.adj[t].clear();
                    mt.alive[t] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<char> w_mask = w.mask();
    int w_total = w.size();

    // Heavy component (strictly more than half of W) of g minus a separator.
    auto heavy_component = [&](const std::vector<char>& sep) -> std::optional<std::vector<int>> {
        std::vector<char> keep(n);
        for (int v = 0; v < n; ++v) keep[v] = !sep[v];
        std::optional<std::vector<int>> heavy;
        for (auto& comp : components_of_subset(g, keep)) {
            int count = 0;
            for (int v : comp) count += w_mask[v];
            if (2 * count > w_total) {
                if (heavy) throw std::logic_error("two heavy components beside one separator");
                heavy = comp;
            }
        }
        return heavy;
    };

    // Bag union over the component of `from` in the tree minus edge (from, to).
    auto side_union = [&](int from, int banned) {
        std::vector<char> uni(n, 0);
        std::vector<char> visited(b, 0);
        std::vector<int> stack{from};
        visited[from] = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (mt.bag[t][v]) uni[v] = 1;
            for (int s : mt.adj[t])
                if (s != banned || t != from)
                    if (!visited[s]) {
                        visited[s] = 1;
                        stack.push_back(s);
                    }
        }
        return uni;
    };

    // Orient each tree edge toward the side holding the heavy component.
    std::vector<int> out_degree(b, 0);
    for (int t = 0; t < b; ++t) {
        if (!mt.alive[t]) continue;
        for (int s : mt.adj[t]) {
            if (s < t) continue;  // each edge once
            std::vector<char> sep(n, 0);
            for (int v = 0; v < n; ++v) sep[v] = mt.bag[t][v] && mt.bag[s][v];
            auto heavy = heavy_component(sep);
            if (!heavy) continue;
            std::vector<char> u_t = side_union(t, s);
            bool in_t_side = true;
            for (int v : *heavy)
                if (!u_t[v]) {
                    in_t_side = false;
                    break;
                }
            if (in_t_side) {
                ++out_degree[s];  // orient s -> t
            } else {
                std::vector<char> u_s = side_union(s, t);
                for (int v : *heavy)
                    if (!u_s[v]) throw std::logic_error("heavy component straddles a tree separator");
                ++out_degree[t];  // orient t -> s
            }
        }
    }

    int sink = -1;
    for (int t = 0; t < b; ++t) {
        if (!mt.alive[t]) continue;
        if (out_degree[t] > 1) throw std::logic_error("tree node with out-degree above one");
        if (out_degree[t] == 0 && sink == -1) sink = t;
    }
    if (sink == -1) throw std::logic_error("orientation has no sink");

    VertexSet s_set = VertexSet::from_mask(mt.bag[sink]);
    if (s_set.size() > k) throw std::logic_error("separator exceeds k");

    // Postcondition check, independent of the orientation bookkeeping.
    std::vector<char> keep(n);
    std::vector<char> s_mask = s_set.mask();
    for (int v = 0; v < n; ++v) keep[v] = !s_mask[v];
    for (auto& comp : components_of_subset(g, keep)) {
        int count = 0;
        for (int v : comp) count += w_mask[v];
        if (2 * count > w_total) throw std::logic_error("separator fails the balance bound");
    }
    return s_set;
}

// ------------------------------------------------------------------- search

namespace {

struct TdSearch {
    int n = 0;
    int k = 0;
    long long budget = 0;
    long long nodes = 0;
    std::vector<std::vector<char>> adj;  // current fill graph
    std::vector<char> eliminated;
    std::vector<int> order;
    std::unordered_set<unsigned long long> failed;  // eliminated-set memo (n <= 64)
    bool use_memo = false;
    bool budget_hit = false;

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < n; ++w) d += (!eliminated[w] && adj[v][w]);
        return d;
    }

    bool simplicial(int v) const {
        std::vector<int> nb;
        for (int w = 0; w < n; ++w)
            if (!eliminated[w] && adj[v][w]) nb.push_back(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]][nb[j]]) return false;
        return true;
    }

    unsigned long long mask() const {
        unsigned long long m = 0;
        for (int v = 0; v < n; ++v)
            if (eliminated[v]) m |= 1ULL << v;
        return m;
    }

    void eliminate(int v, std::vector<std::pair<int, int>>& added) {
        std::vector<int> nb;
        for (int w = 0; w < n; ++w)
            if (!eliminated[w] && adj[v][w]) nb.push_back(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]][nb[j]]) {
                    adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
                    added.emplace_back(nb[i], nb[j]);
                }
        eliminated[v] = 1;
        order.push_back(v);
    }

    void undo(int v, const std::vector<std::pair<int, int>>& added) {
        for (auto [a, c] : added) adj[a][c] = adj[c][a] = 0;
        eliminated[v] = 0;
        order.pop_back();
    }

    bool search(int remaining) {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (remaining == 0) return true;
        if (remaining <= k) {
            // Any order finishes with bags of size <= remaining <= k.
            for (int v = 0; v < n; ++v)
                if (!eliminated[v]) {
                    std::vector<std::pair<int, int>> added;
                    eliminate(v, added);
                }
            return true;
        }
        // Safe reductions: simplicial vertices of admissible degree, and the
        // standard degree <= 2 reductions when the target allows them.
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            int d = degree(v);
            bool safe = (d + 1 <= k) && (simplicial(v) || (d == 1 && k >= 2) || (d == 2 && k >= 3));
            if (safe) {
                std::vector<std::pair<int, int>> added;
                eliminate(v, added);
                if (search(remaining - 1)) return true;
                undo(v, added);
                if (budget_hit) return false;
                if (use_memo) failed.insert(mask());
                return false;  // safe rule: no need to branch further
            }
        }
        for (int v = 0; v < n; ++v) {
            if (eliminated[v] || degree(v) > k - 1) continue;
            std::vector<std::pair<int, int>> added;
            eliminate(v, added);
            bool known_failed = use_memo && failed.count(mask());
            if (!known_failed && search(remaining - 1)) return true;
            undo(v, added);
            if (budget_hit) return false;
        }
        if (use_memo) failed.insert(mask());
        return false;
    }
};

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> when(n);
    for (int i = 0; i < n; ++i) when[order[i]] = i;

    // Re-run the elimination to collect bags in the fill graph.
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.underlying_undirected().edge_list()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<std::vector<int>> bag(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int w : adj[v])
            if (when[w] > i) later.push_back(w);
        bag[v] = later;
        bag[v].push_back(v);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t c = a + 1; c < later.size(); ++c) {
                adj[later[a]].insert(later[c]);
                adj[later[c]].insert(later[a]);
            }
    }

    std::vector<std::pair<int, int>> tree_edges;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent = -1, best = n + 1;
        for (int w : bag[v]) {
            if (w == v) continue;
            if (when[w] < best) {
                best = when[w];
                parent = w;
            }
        }
        if (parent == -1 && i + 1 < n) parent = order[i + 1];  // keep the tree connected
        if (parent != -1) tree_edges.emplace_back(v, parent);
    }

    TreeDecomposition td;
    td.tree = Graph::undirected(n, tree_edges);
    td.bags.reserve(n);
    for (int v = 0; v < n; ++v) td.bags.push_back(VertexSet::from_unsorted(bag[v], n));
    return td;
}

}  // namespace

TdSearchResult greedy_td_search(const Graph& g, int k, long long budget) {
    int n = g.vertex_count();
    if (n > 128) throw BudgetError("treewidth search limited to 128 vertices");
    if (k < 1) throw std::invalid_argument("k must be positive");

    TdSearchResult res;
    if (n == 0) {
        res.complete = true;
        return res;
    }

    TdSearch s;
    s.n = n;
    s.k = k;
    s.budget = budget;
    s.use_memo = n <= 64;
    s.adj.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.underlying_undirected().edge_list()) s.adj[u][v] = s.adj[v][u] = 1;
    s.eliminated.assign(n, 0);

    bool found = s.search(n);
    res.nodes = s.nodes;
    res.complete = !s.budget_hit;
    if (found) {
        TreeDecomposition td = decomposition_from_order(g, s.order);
        int width = verify_td(g, td);
        if (width >= k) throw std::logic_error("search produced a decomposition of excessive width");
        res.td = std::move(td);
        res.complete = true;
    }
    return res;
}

}  // namespace vtsep
