#include "vtsep/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace vtsep {

// --------------------------------------------------------------- GroupTable

GroupTable::GroupTable(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {
    if (order <= 0) throw std::invalid_argument("group order must be positive");
    if (table_.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("group table has wrong size");
    for (int x : table_)
        if (x < 0 || x >= order) throw std::invalid_argument("group table entry out of range");

    identity_ = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ == -1) throw std::invalid_argument("group table has no identity");

    inverse_.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == -1)
            throw std::invalid_argument("group element " + std::to_string(a) + " has no inverse");
    }

    if (order <= 64) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("group table is not associative");
    } else {
        unsigned long long s = 0x9e3779b97f4a7c15ULL;
        auto next = [&s, order]() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            return static_cast<int>(s % order);
        };
        for (int i = 0; i < 200000; ++i) {
            int a = next(), b = next(), c = next();
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::invalid_argument("group table is not associative");
        }
    }
}

GroupTable GroupTable::cyclic(int n) {
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return GroupTable(n, std::move(t));
}

GroupTable GroupTable::symmetric(int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("symmetric group supported for 1 <= k <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int order = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> t(static_cast<size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            std::vector<int> comp(k);
            for (int i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
            t[static_cast<size_t>(a) * order + b] = index_of(comp);
        }
    }
    return GroupTable(order, std::move(t));
}

// --------------------------------------------------------------- circulants

GeneratedGraph make_circulant(int n, const std::vector<int>& connection, bool directed) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    if (connection.empty()) throw std::invalid_argument("empty connection set");
    std::set<int> conn;
    for (int s : connection) {
        int r = ((s % n) + n) % n;
        if (r == 0) throw std::invalid_argument("connection residue 0 would create loops");
        conn.insert(r);
    }
    if (!directed) {
        for (int s : conn)
            if (!conn.count(n - s))
                throw std::invalid_argument("undirected circulant needs a negation-closed connection set");
    }
    GeneratedGraph out;
    out.family = "circulant";
    if (directed) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i)
            for (int s : conn) arcs.emplace_back(i, (i + s) % n);
        out.graph = Graph::directed(n, arcs);
    } else {
        std::set<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int s : conn) {
                int j = (i + s) % n;
                edges.insert({std::min(i, j), std::max(i, j)});
            }
        out.graph = Graph::undirected(n, {edges.begin(), edges.end()});
    }
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    out.transitivity_gens.emplace_back(std::move(rot));
    out.frontier = VertexSet::empty_set(n);
    return out;
}

// ------------------------------------------------------------ Cayley graphs

GeneratedGraph make_cayley(const GroupTable& tbl, const std::vector<int>& connection, bool directed) {
    int n = tbl.order();
    std::set<int> conn(connection.begin(), connection.end());
    for (int a : conn)
        if (a < 0 || a >= n) throw std::invalid_argument("connection element out of range");
    if (conn.count(tbl.identity())) throw std::invalid_argument("identity in connection set (loops forbidden)");
    if (!directed) {
        for (int a : conn)
            if (!conn.count(tbl.inv(a)))
                throw std::invalid_argument("undirected Cayley graph needs an inverse-closed connection set");
    }

    GeneratedGraph out;
    out.family = "cayley";
    if (directed) {
        std::vector<std::pair<int, int>> arcs;
        for (int x = 0; x < n; ++x)
            for (int a : conn) arcs.emplace_back(x, tbl.mul(a, x));
        out.graph = Graph::directed(n, arcs);
    } else {
        std::set<std::pair<int, int>> edges;
        for (int x = 0; x < n; ++x)
            for (int a : conn) {
                int y = tbl.mul(a, x);
                edges.insert({std::min(x, y), std::max(x, y)});
            }
        out.graph = Graph::undirected(n, {edges.begin(), edges.end()});
    }

    // Right multiplications commute with the left-translation edges, so they
    // are automorphisms; add elements until the attached set acts transitively.
    auto right_mult = [&](int gelem) {
        std::vector<int> img(n);
        for (int x = 0; x < n; ++x) img[x] = tbl.mul(x, gelem);
        return Permutation(std::move(img));
    };
    std::vector<int> attached(conn.begin(), conn.end());
    for (;;) {
        std::vector<char> orbit(n, 0);
        orbit[tbl.identity()] = 1;
        std::vector<int> stack{tbl.identity()};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a : attached) {
                int y = tbl.mul(x, a);
                if (!orbit[y]) {
                    orbit[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        int missing = -1;
        for (int x = 0; x < n; ++x)
            if (!orbit[x]) {
                missing = x;
                break;
            }
        if (missing == -1) break;
        attached.push_back(missing);
    }
    for (int a : attached) out.transitivity_gens.push_back(right_mult(a));
    out.frontier = VertexSet::empty_set(n);
    return out;
}

// ----------------------------------------------------------------- families

namespace {

GeneratedGraph make_prism(int n) {
    if (n < 3) throw std::invalid_argument("prism needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    GeneratedGraph out;
    out.family = "prism";
    out.graph = Graph::undirected(2 * n, edges);
    std::vector<int> rot(2 * n), swap(2 * n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        rot[n + i] = n + (i + 1) % n;
        swap[i] = n + i;
        swap[n + i] = i;
    }
    out.transitivity_gens.emplace_back(std::move(rot));
    out.transitivity_gens.emplace_back(std::move(swap));
    out.frontier = VertexSet::empty_set(2 * n);
    return out;
}

GeneratedGraph make_torus(int m, int n) {
    if (m < 3 || n < 3) throw std::invalid_argument("torus needs both sides >= 3");
    auto id = [n](int i, int j) { return i * n + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            edges.emplace_back(id(i, j), id(i, (j + 1) % n));
            edges.emplace_back(id(i, j), id((i + 1) % m, j));
        }
    GeneratedGraph out;
    out.family = "torus";
    out.graph = Graph::undirected(m * n, edges);
    std::vector<int> row(m * n), col(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            row[id(i, j)] = id((i + 1) % m, j);
            col[id(i, j)] = id(i, (j + 1) % n);
        }
    out.transitivity_gens.emplace_back(std::move(row));
    out.transitivity_gens.emplace_back(std::move(col));
    out.frontier = VertexSet::empty_set(m * n);
    return out;
}

GeneratedGraph make_petersen() {
    // Kneser graph on 2-subsets of {0..4}: vertices are the pairs, edges join
    // disjoint pairs.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    auto pair_id = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::make_pair(a, b)) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    GeneratedGraph out;
    out.family = "petersen";
    out.graph = Graph::undirected(10, edges);
    auto induced = [&](const std::vector<int>& ground) {
        std::vector<int> img(10);
        for (size_t i = 0; i < pairs.size(); ++i)
            img[i] = pair_id(ground[pairs[i].first], ground[pairs[i].second]);
        return Permutation(std::move(img));
    };
    out.transitivity_gens.push_back(induced({1, 0, 2, 3, 4}));
    out.transitivity_gens.push_back(induced({1, 2, 3, 4, 0}));
    out.frontier = VertexSet::empty_set(10);
    return out;
}

GeneratedGraph make_tree_ball(int d, int r) {
    if (d < 2) throw std::invalid_argument("tree degree must be >= 2");
    if (r < 0) throw std::invalid_argument("negative radius");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> depth_of{0};
    int next = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (depth_of[v] == r) continue;
        int children = (v == 0) ? d : d - 1;
        for (int c = 0; c < children; ++c) {
            edges.emplace_back(v, next);
            depth_of.push_back(depth_of[v] + 1);
            q.push(next);
            ++next;
        }
    }
    GeneratedGraph out;
    out.family = "tree_ball";
    out.graph = Graph::undirected(next, edges);
    std::vector<int> leaves;
    for (int v = 0; v < next; ++v)
        if (depth_of[v] == r) leaves.push_back(v);
    out.frontier = VertexSet(std::move(leaves), next);
    return out;
}

}  // namespace

GeneratedGraph make_family(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "prism") {
        want(1);
        return make_prism(params[0]);
    }
    if (name == "torus") {
        want(2);
        return make_torus(params[0], params[1]);
    }
    if (name == "petersen") {
        want(0);
        return make_petersen();
    }
    if (name == "tree_ball") {
        want(2);
        return make_tree_ball(params[0], params[1]);
    }
    if (name == "figure2") {
        int half = params.empty() ? 8 : params[0];
        if (params.size() > 1) throw std::invalid_argument("figure2 takes at most one parameter");
        WindowGraph w = window(figure2_presentation(), half);
        GeneratedGraph out;
        out.family = "figure2";
        out.graph = w.graph;
        out.frontier = w.frontier;
        return out;
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

// ---------------------------------------------------- periodic presentations

int PeriodicPresentation::max_jump() const {
    int m = 0;
    for (const auto& j : jumps) m = std::max(m, std::abs(j.k));
    return m;
}

PeriodicPresentation make_periodic(int cell_vertices, const std::vector<std::pair<int, int>>& cell_edges,
                                   const std::vector<Jump>& jumps) {
    PeriodicPresentation p;
    p.cell = Graph::undirected(cell_vertices, cell_edges);
    std::set<std::tuple<int, int, int>> seen;
    for (Jump j : jumps) {
        p.cell.check_vertex(j.u);
        p.cell.check_vertex(j.v);
        if (j.k == 0) throw std::invalid_argument("jump shift must be nonzero");
        if (j.k < 0) {
            std::swap(j.u, j.v);
            j.k = -j.k;
        }
        if (!seen.insert({j.u, j.v, j.k}).second)
            throw std::invalid_argument("duplicate jump after normalization");
        p.jumps.push_back(j);
    }
    return p;
}

PeriodicPresentation ladder_presentation() {
    return make_periodic(2, {{0, 1}}, {{0, 0, 1}, {1, 1, 1}});
}

PeriodicPresentation path_presentation() {
    return make_periodic(1, {}, {{0, 0, 1}});
}

PeriodicPresentation squared_path_presentation() {
    return make_periodic(1, {}, {{0, 0, 1}, {0, 0, 2}});
}

PeriodicPresentation prism_cell4_presentation() {
    // Two rungs per cell: vertices a0=0, b0=1, a1=2, b1=3.
    return make_periodic(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}, {{2, 0, 1}, {3, 1, 1}});
}

PeriodicPresentation figure2_presentation() {
    // Triangle strip: rails on both strands, rungs, and one-way diagonals
    // a_i ~ b_{i+1}.  The diagonals break every end-fixing strand swap, so the
    // strands form two orbits under translations while the half-turn
    // (swap strands, reverse layers) still acts transitively.
    return make_periodic(2, {{0, 1}}, {{0, 0, 1}, {1, 1, 1}, {0, 1, 1}});
}

WindowGraph window(const PeriodicPresentation& p, int half_width) {
    if (half_width < 1) throw std::invalid_argument("window half-width must be >= 1");
    int c = p.cell.vertex_count();
    int layers = 2 * half_width + 1;
    WindowGraph w;
    w.half_width = half_width;
    w.cell_size = c;
    w.layer_of.resize(static_cast<size_t>(layers) * c);
    w.cell_of.resize(static_cast<size_t>(layers) * c);
    for (int i = -half_width; i <= half_width; ++i)
        for (int v = 0; v < c; ++v) {
            int id = (i + half_width) * c + v;
            w.layer_of[id] = i;
            w.cell_of[id] = v;
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = -half_width; i <= half_width; ++i)
        for (auto [u, v] : p.cell.edge_list()) edges.emplace_back(w.vertex_id(u, i), w.vertex_id(v, i));
    for (const auto& j : p.jumps)
        for (int i = -half_width; i + j.k <= half_width; ++i)
            edges.emplace_back(w.vertex_id(j.u, i), w.vertex_id(j.v, i + j.k));
    w.graph = Graph::undirected(layers * c, edges);
    int reach = p.max_jump();
    std::vector<int> frontier;
    for (int id = 0; id < layers * c; ++id)
        if (std::abs(w.layer_of[id]) > half_width - reach) frontier.push_back(id);
    w.frontier = VertexSet(std::move(frontier), layers * c);
    return w;
}

// -------------------------------------------------------- layered morphisms

bool is_periodic_automorphism(const PeriodicPresentation& p, const LayeredAutomorphism& a) {
    if (a.cell_map.size() != p.cell.vertex_count()) return false;
    if (!a.layer_offset.empty() && a.layer_offset.size() != static_cast<size_t>(p.cell.vertex_count()))
        return false;
    std::set<std::pair<int, int>> cell_edges;
    for (auto [u, v] : p.cell.edge_list()) cell_edges.insert({std::min(u, v), std::max(u, v)});
    std::set<std::tuple<int, int, int>> jumps;
    for (const auto& j : p.jumps) jumps.insert({j.u, j.v, j.k});
    // The image of an edge with layer difference d joins (cu, *) to (cv, * + d')
    // where d' = ±d + offset[v] - offset[u]; it must exist in the presentation.
    auto has_shifted_edge = [&](int cu, int cv, int d) {
        if (d == 0) return cell_edges.count({std::min(cu, cv), std::max(cu, cv)}) > 0;
        int u = cu, v = cv, k = d;
        if (k < 0) {
            std::swap(u, v);
            k = -k;
        }
        return jumps.count({u, v, k}) > 0;
    };
    auto image_ok = [&](int u, int v, int d) {
        int cu = a.cell_map.apply(u), cv = a.cell_map.apply(v);
        int d2 = (a.reflects ? -d : d) + a.offset_of(v) - a.offset_of(u);
        return has_shifted_edge(cu, cv, d2);
    };
    for (auto [u, v] : p.cell.edge_list())
        if (!image_ok(u, v, 0) || !image_ok(v, u, 0)) return false;
    for (const auto& j : p.jumps)
        if (!image_ok(j.u, j.v, j.k)) return false;
    return true;
}

EndClassification classify_ends(const PeriodicPresentation& p,
                                const std::vector<LayeredAutomorphism>& evidence) {
    EndClassification out;
    int c = p.cell.vertex_count();
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& a : evidence) {
        if (!is_periodic_automorphism(p, a))
            throw std::invalid_argument("evidence map is not an automorphism of the presentation");
        if (a.reflects) {
            ++out.reflection_count;
            continue;
        }
        ++out.shift_count;
        for (int v = 0; v < c; ++v) {
            int rv = find(v), rw = find(a.cell_map.apply(v));
            if (rv != rw) parent[rw] = rv;
        }
    }
    std::vector<int> label(c, -1);
    int next = 0;
    out.class_of_cell.resize(c);
    for (int v = 0; v < c; ++v) {
        int r = find(v);
        if (label[r] == -1) label[r] = next++;
        out.class_of_cell[v] = label[r];
    }
    out.type = next;
    return out;
}

std::vector<LayeredAutomorphism> standard_evidence(const PeriodicPresentation& p, const std::string& name) {
    int c = p.cell.vertex_count();
    std::vector<LayeredAutomorphism> ev;
    ev.push_back({Permutation::identity(c), 1, false, {}});  // translation by one layer
    if (name == "ladder") {
        ev.push_back({Permutation({1, 0}), 0, false, {}});
        ev.push_back({Permutation::identity(c), 0, true, {}});
    } else if (name == "path" || name == "squared_path") {
        ev.push_back({Permutation::identity(c), 0, true, {}});
    } else if (name == "prism_cell4") {
        ev.push_back({Permutation({1, 0, 3, 2}), 0, false, {}});
        // Half-shift: rung 0 onto rung 1 within the cell, rung 1 onto rung 0
        // of the next layer.
        ev.push_back({Permutation({2, 3, 0, 1}), 0, false, {0, 0, 1, 1}});
        ev.push_back({Permutation({2, 3, 0, 1}), 0, true, {}});
    } else if (name == "figure2") {
        ev.push_back({Permutation({1, 0}), 0, true, {}});
    } else {
        throw std::invalid_argument("no standard evidence for presentation '" + name + "'");
    }
    for (const auto& a : ev)
        if (!is_periodic_automorphism(p, a))
            throw std::logic_error("standard evidence is not an automorphism of '" + name + "'");
    return ev;
}

}  // namespace vtsep
