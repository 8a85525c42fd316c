#include "vtsep/ringstruct.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace vtsep {

// ------------------------------------------------------------- CyclicSystem

int CyclicSystem::order_distance(int block_a, int block_b) const {
    int b = block_count();
    int pa = position_of_block.at(block_a);
    int pb = position_of_block.at(block_b);
    int d = std::abs(pa - pb);
    return std::min(d, b - d);
}

CyclicSystem verify_cyclic_system(const Graph& g, const BlockSystem& sys, const std::vector<int>& order,
                                  const std::vector<Permutation>& gens) {
    if (sys.universe() != g.vertex_count()) throw std::invalid_argument("block system does not match graph");
    int b = sys.block_count();
    if (b < 3) throw std::invalid_argument("cyclic order needs at least 3 blocks");
    if (static_cast<int>(order.size()) != b)
        throw std::invalid_argument("order length does not match block count");
    std::vector<char> seen(b, 0);
    for (int blk : order) {
        if (blk < 0 || blk >= b || seen[blk])
            throw std::invalid_argument("order is not a permutation of the blocks");
        seen[blk] = 1;
    }

    CyclicSystem cs;
    cs.system = sys;
    cs.order = order;
    cs.gens = gens;
    cs.position_of_block.assign(b, -1);
    for (int pos = 0; pos < b; ++pos) cs.position_of_block[order[pos]] = pos;

    // Each generator must induce a symmetry of the circuit: consecutive
    // blocks map to consecutive blocks.
    std::vector<Permutation> block_action = induced_block_action(sys, gens);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Permutation& act = block_action[gi];
        for (int pos = 0; pos < b; ++pos) {
            int u = order[pos], v = order[(pos + 1) % b];
            if (cs.order_distance(act.apply(u), act.apply(v)) != 1)
                throw std::invalid_argument("generator " + std::to_string(gi) +
                                            " breaks the cyclic order at blocks " + std::to_string(u) + "," +
                                            std::to_string(v));
        }
    }
    return cs;
}

// ------------------------------------------------------------ ring checking

namespace {

bool side_covered(const Graph& g, const VertexSet& from, const VertexSet& into) {
    for (int v : from) {
        bool ok = false;
        for (int w : g.neighbors(v))
            if (into.contains(w)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

bool blocks_neighborly(const Graph& g, const VertexSet& a, const VertexSet& b) {
    return side_covered(g, a, b) && side_covered(g, b, a);
}

}  // namespace

namespace {

// BFS that stops once all targets are reached, reusing a scratch distance
// array across calls.  Returns the largest target distance; throws when a
// target is unreachable.
struct TargetBfs {
    std::vector<int> dist;
    std::vector<int> touched;
    std::vector<int> queue;

    int run(const Graph& g, int source, const VertexSet& targets) {
        if (dist.size() != static_cast<size_t>(g.vertex_count())) dist.assign(g.vertex_count(), -1);
        queue.clear();
        touched.clear();
        dist[source] = 0;
        touched.push_back(source);
        queue.push_back(source);
        int remaining = targets.size() - (targets.contains(source) ? 1 : 0);
        int worst = 0;
        for (size_t head = 0; head < queue.size() && remaining > 0; ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (dist[w] != -1) continue;
                dist[w] = dist[v] + 1;
                touched.push_back(w);
                if (targets.contains(w)) {
                    worst = std::max(worst, dist[w]);
                    --remaining;
                }
                queue.push_back(w);
            }
        }
        for (int v : touched) dist[v] = -1;
        if (remaining > 0) throw std::invalid_argument("disconnected within a block pair");
        return worst;
    }
};

}  // namespace

int cohesiveness_index(const Graph& g, const CyclicSystem& cyclic) {
    int b = cyclic.block_count();
    int q = 0;
    TargetBfs bfs;
    for (int pos = 0; pos < b; ++pos) {
        const VertexSet& here = cyclic.system.blocks[cyclic.order[pos]];
        const VertexSet& next = cyclic.system.blocks[cyclic.order[(pos + 1) % b]];
        VertexSet scope = set_union(here, next);
        for (int v : here) q = std::max(q, bfs.run(g, v, scope));
    }
    return q;
}

namespace {

// Everything except the cohesiveness sweep, which candidate triage skips.
RingCertificate ring_like_core(const Graph& g, const CyclicSystem& cyclic) {
    RingCertificate cert;
    cert.cyclic = cyclic;
    int b = cyclic.block_count();
    cert.s = cyclic.system.blocks[0].size();
    for (const auto& blk : cyclic.system.blocks)
        if (blk.size() != cert.s) throw std::invalid_argument("blocks have unequal sizes");

    cert.t = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            int du = cyclic.system.block_of[u], dv = cyclic.system.block_of[v];
            if (du != dv) cert.t = std::max(cert.t, cyclic.order_distance(du, dv));
        }
    }
    if (cert.t == 0) throw std::invalid_argument("no edges between distinct blocks");

    cert.tight = true;
    for (int pos = 0; pos < b && cert.tight; ++pos) {
        int u = cyclic.order[pos], v = cyclic.order[(pos + cert.t) % b];
        if (!blocks_neighborly(g, cyclic.system.blocks[u], cyclic.system.blocks[v])) cert.tight = false;
    }
    cert.cohesive_q = -1;
    return cert;
}

}  // namespace

RingCertificate verify_ring_like(const Graph& g, const CyclicSystem& cyclic) {
    RingCertificate cert = ring_like_core(g, cyclic);
    cert.cohesive_q = cohesiveness_index(g, cyclic);
    return cert;
}

// -------------------------------------------------------------- ring search

namespace {

// Quotient-level adjacency pairs (no loops).
std::vector<std::pair<int, int>> block_adjacency(const Graph& g, const BlockSystem& sys) {
    std::set<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            int bu = sys.block_of[u], bv = sys.block_of[v];
            if (bu != bv) pairs.insert({std::min(bu, bv), std::max(bu, bv)});
        }
    return {pairs.begin(), pairs.end()};
}

// Enumerates circular orders with all quotient-edge spans <= t_cap, pruned by
// the requirement that consecutive placed blocks keep consecutive generator
// images.  The callback returns true to stop the enumeration.
struct OrderSearch {
    int b = 0;
    int t_cap = 0;
    std::vector<std::vector<int>> nbrs;             // quotient adjacency
    const std::vector<Permutation>* actions = nullptr;  // induced block actions
    std::vector<int> pos_of;                        // -1 = unplaced
    std::vector<int> order;
    long long nodes = 0;
    long long node_cap = 0;
    bool stopped = false;
    std::function<bool(const std::vector<int>&)> on_complete;

    void run() {
        pos_of.assign(b, -1);
        order.assign(b, -1);
        order[0] = 0;
        pos_of[0] = 0;
        extend(1);
    }

    int circ(int i, int j) const {
        int d = std::abs(i - j);
        return std::min(d, b - d);
    }

    bool span_ok(int blk, int pos) const {
        for (int nb : nbrs[blk]) {
            int p = pos_of[nb];
            if (p != -1 && circ(pos, p) > t_cap) return false;
        }
        return true;
    }

    void extend(int pos) {
        if (stopped) return;
        if (++nodes > node_cap) throw BudgetError("order search budget exhausted");
        if (pos == b) {
            if (on_complete(order)) stopped = true;
            return;
        }
        for (int blk = 1; blk < b; ++blk) {
            if (pos_of[blk] != -1) continue;
            if (!span_ok(blk, pos)) continue;
            pos_of[blk] = pos;
            order[pos] = blk;
            if (symmetry_check(pos)) extend(pos + 1);
            pos_of[blk] = -1;
            order[pos] = -1;
            if (stopped) return;
        }
    }

    // After placing position pos, every consecutive placed pair whose images
    // are both placed must have consecutive images.
    bool symmetry_check(int pos) const {
        int blk = order[pos];
        int prev = order[pos - 1];
        for (const auto& act : *actions) {
            int ia = act.apply(blk), ip = act.apply(prev);
            int pa = pos_of[ia], pp = pos_of[ip];
            if (pa != -1 && pp != -1 && circ(pa, pp) != 1) return false;
            if (pos + 1 == b) {  // circle closes against position 0
                int i0 = act.apply(order[0]);
                int p0 = pos_of[i0];
                if (pa != -1 && p0 != -1 && circ(pa, p0) != 1) return false;
            }
        }
        return true;
    }
};

// Orders induced by generators whose block action is a single b-cycle.
std::vector<std::vector<int>> generator_cycle_orders(const BlockSystem& sys,
                                                     const std::vector<Permutation>& gens) {
    std::vector<std::vector<int>> out;
    std::vector<Permutation> actions;
    try {
        actions = induced_block_action(sys, gens);
    } catch (const std::invalid_argument&) {
        return out;
    }
    // Pairwise products widen the net beyond the raw generators.
    std::vector<Permutation> pool = actions;
    for (size_t i = 0; i < actions.size(); ++i)
        for (size_t j = 0; j < actions.size(); ++j) pool.push_back(actions[i].compose(actions[j]));
    std::set<std::vector<int>> seen;
    int b = sys.block_count();
    for (const auto& act : pool) {
        if (!seen.insert(act.image).second) continue;
        std::vector<int> cyc;
        int cur = 0;
        for (int i = 0; i < b; ++i) {
            cyc.push_back(cur);
            cur = act.apply(cur);
        }
        if (cur != 0) continue;  // not a single cycle
        std::vector<char> hit(b, 0);
        bool all = true;
        for (int v : cyc) {
            if (hit[v]) {
                all = false;
                break;
            }
            hit[v] = 1;
        }
        if (all) out.push_back(std::move(cyc));
    }
    return out;
}

// Greedy nearest-neighbor walk over the quotient; validated by the caller.
std::optional<std::vector<int>> greedy_walk_order(const Graph& g, const BlockSystem& sys) {
    Graph q = quotient_graph(g, sys);
    int b = q.vertex_count();
    std::vector<char> used(b, 0);
    std::vector<int> order{0};
    used[0] = 1;
    for (int step = 1; step < b; ++step) {
        DistanceMap d = bfs_distances(q, std::vector<int>{order.back()});
        int best = -1, best_d = std::numeric_limits<int>::max();
        for (int v = 0; v < b; ++v) {
            if (used[v]) continue;
            auto dv = d.get(v);
            if (dv && *dv < best_d) {
                best_d = *dv;
                best = v;
            }
        }
        if (best == -1) return std::nullopt;
        used[best] = 1;
        order.push_back(best);
    }
    return order;
}

}  // namespace

RingSearchResult detect_ring(const Graph& g, const std::vector<Permutation>& gens, int max_t) {
    if (max_t < 1) throw std::invalid_argument("max_t must be >= 1");
    RingSearchResult res;

    std::vector<Permutation> evidence = gens;
    bool full_group_known = false;
    if (!g.is_directed() && g.vertex_count() <= 64) {
        try {
            auto aut = find_automorphisms(g);
            std::set<std::vector<int>> seen;
            for (const auto& p : evidence) seen.insert(p.image);
            for (const auto& p : aut.generators)
                if (seen.insert(p.image).second) evidence.push_back(p);
            full_group_known = true;
        } catch (const BudgetError&) {
        }
    }

    auto orbits = orbit_transitivity(g.vertex_count(), evidence, &g);
    if (!orbits.transitive) throw std::invalid_argument("action is not transitive");

    // Block-system lattice: seed-minimal systems plus join closure.
    std::vector<BlockSystem> systems = enumerate_block_systems(g.vertex_count(), evidence);
    bool lattice_complete = true;
    {
        std::set<std::vector<int>> seen;
        for (const auto& s : systems) seen.insert(s.block_of);
        size_t cap = 128;
        for (size_t i = 0; i < systems.size(); ++i) {
            for (size_t j = i + 1; j < systems.size(); ++j) {
                BlockSystem joined = join_block_systems(systems[i], systems[j]);
                if (seen.insert(joined.block_of).second) systems.push_back(std::move(joined));
                if (systems.size() > cap) {
                    lattice_complete = false;
                    break;
                }
            }
            if (systems.size() > cap) break;
        }
    }

    bool searched_everything = full_group_known && lattice_complete;
    std::optional<RingCertificate> best;

    for (const auto& sys : systems) {
        int b = sys.block_count();
        if (b < 3) continue;
        int s0 = sys.blocks[0].size();
        bool equal = true;
        for (const auto& blk : sys.blocks)
            if (blk.size() != s0) equal = false;
        if (!equal) continue;

        std::optional<RingCertificate> system_best;
        auto try_order = [&](const std::vector<int>& ord) {
            try {
                CyclicSystem cs = verify_cyclic_system(g, sys, ord, evidence);
                RingCertificate cert = ring_like_core(g, cs);
                if (cert.t > max_t) return false;
                long long st = static_cast<long long>(cert.s) * cert.t;
                if (!system_best || st < static_cast<long long>(system_best->s) * system_best->t)
                    system_best = cert;
                return true;
            } catch (const std::invalid_argument&) {
                return false;
            }
        };

        for (const auto& ord : generator_cycle_orders(sys, evidence)) try_order(ord);

        if (b <= 12) {
            std::vector<Permutation> actions;
            try {
                actions = induced_block_action(sys, evidence);
            } catch (const std::invalid_argument&) {
                continue;  // not a block system of the evidence group
            }
            bool system_resolved = true;
            for (int t_cap = 1; t_cap <= max_t && (!system_best || t_cap < system_best->t); ++t_cap) {
                OrderSearch search;
                search.b = b;
                search.t_cap = t_cap;
                search.node_cap = 2'000'000;
                search.actions = &actions;
                search.nbrs.assign(b, {});
                for (auto [x, y] : block_adjacency(g, sys)) {
                    search.nbrs[x].push_back(y);
                    search.nbrs[y].push_back(x);
                }
                search.on_complete = [&](const std::vector<int>& ord) { return try_order(ord); };
                try {
                    search.run();
                } catch (const BudgetError&) {
                    system_resolved = false;
                }
            }
            if (!system_resolved && !system_best) searched_everything = false;
        } else {
            if (auto w = greedy_walk_order(g, sys)) try_order(*w);
            // No exact search beyond 12 blocks: a miss here is inconclusive.
            if (!system_best) searched_everything = false;
        }

        if (system_best) {
            long long st = static_cast<long long>(system_best->s) * system_best->t;
            if (!best || st < static_cast<long long>(best->s) * best->t) best = system_best;
        }
    }

    if (best) best->cohesive_q = cohesiveness_index(g, best->cyclic);
    res.cert = best;
    res.exhaustive = searched_everything;
    return res;
}

// ------------------------------------------------------- periodic structure

namespace {

struct PhaseCheck {
    int t = 0;
    bool feasible = false;
};

PhaseCheck phase_spans(const PeriodicPresentation& p, const std::vector<int>& phase, int r, int max_t) {
    PhaseCheck out;
    int t = 0;
    for (auto [u, v] : p.cell.edge_list()) t = std::max(t, std::abs(phase[u] - phase[v]));
    for (const auto& j : p.jumps)
        t = std::max(t, std::abs(j.k * r + phase[j.v] - phase[j.u]));
    out.t = t;
    out.feasible = t >= 1 && t <= max_t;
    return out;
}

}  // namespace

std::optional<PeriodicRingCertificate> detect_ring_periodic(const PeriodicPresentation& p, int max_t) {
    int c = p.cell.vertex_count();
    std::optional<PeriodicRingCertificate> best;
    bool best_tight = false;

    for (int r = 1; r <= c; ++r) {
        if (c % r != 0) continue;
        int s = c / r;
        // All balanced phase assignments cell -> [0, r).
        std::vector<int> phase(c, 0);
        std::vector<int> count(r, 0);
        std::function<void(int)> assign = [&](int v) {
            if (v == c) {
                PhaseCheck pc = phase_spans(p, phase, r, max_t);
                if (!pc.feasible) return;
                PeriodicRingCertificate cand;
                cand.phases = r;
                cand.phase_of_cell = phase;
                cand.s = s;
                cand.t = pc.t;

                // Tightness and cohesiveness on a window, middle layers only.
                int span_layers = (pc.t + r - 1) / r + 1;
                int margin = 4 * (s * pc.t + span_layers + p.max_jump() + 1);
                WindowGraph w = window(p, margin);
                auto block_members = [&](long long index) {
                    // block index = layer * r + phase
                    long long layer = index >= 0 ? index / r : -((-index + r - 1) / r);
                    int ph = static_cast<int>(index - layer * r);
                    std::vector<int> ids;
                    for (int v2 = 0; v2 < c; ++v2)
                        if (phase[v2] == ph) ids.push_back(w.vertex_id(v2, static_cast<int>(layer)));
                    return VertexSet::from_unsorted(std::move(ids), w.graph.vertex_count());
                };
                cand.tight = true;
                for (int base = 0; base < r && cand.tight; ++base) {
                    VertexSet b1 = block_members(base);
                    VertexSet b2 = block_members(base + pc.t);
                    if (!blocks_neighborly(w.graph, b1, b2)) cand.tight = false;
                }
                int q = 0;
                for (int base = 0; base < r; ++base) {
                    VertexSet here = block_members(base);
                    VertexSet scope = set_union(here, block_members(base + 1));
                    for (int v2 : here) {
                        DistanceMap d = bfs_distances(w.graph, std::vector<int>{v2});
                        for (int w2 : scope) {
                            auto dw = d.get(w2);
                            if (!dw) return;  // disconnected scope: not usable
                            q = std::max(q, *dw);
                        }
                    }
                }
                cand.cohesive_q = q;

                long long st = static_cast<long long>(cand.s) * cand.t;
                long long best_st = best ? static_cast<long long>(best->s) * best->t
                                         : std::numeric_limits<long long>::max();
                bool better = !best || (cand.tight && !best_tight) ||
                              (cand.tight == best_tight && st < best_st);
                if (better) {
                    best = cand;
                    best_tight = cand.tight;
                }
                return;
            }
            for (int ph = 0; ph < r; ++ph) {
                if (count[ph] == s) continue;
                phase[v] = ph;
                ++count[ph];
                assign(v + 1);
                --count[ph];
            }
        };
        assign(0);
    }
    return best;
}

// ---------------------------------------------------------------- kappa_inf

namespace {

// Unit-capacity vertex cut between two vertex groups via augmenting paths on
// the split graph (in/out node per vertex).
struct VertexCut {
    int value = 0;
    std::vector<int> cut_vertices;
};

VertexCut min_vertex_cut(const Graph& g, const std::vector<char>& source_side,
                         const std::vector<char>& sink_side) {
    int n = g.vertex_count();
    const int INF = 1 << 28;
    // Node 2v = in, 2v+1 = out, plus source S = 2n, sink T = 2n+1.
    int S = 2 * n, T = 2 * n + 1;
    int total = 2 * n + 2;
    std::vector<std::vector<int>> head(total);
    std::vector<int> to, cap;
    auto add_edge = [&](int a, int b, int c) {
        head[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        cap.push_back(c);
        head[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        cap.push_back(0);
    };
    for (int v = 0; v < n; ++v) {
        bool terminal = source_side[v] || sink_side[v];
        add_edge(2 * v, 2 * v + 1, terminal ? INF : 1);
        if (source_side[v]) add_edge(S, 2 * v, INF);
        if (sink_side[v]) add_edge(2 * v + 1, T, INF);
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                add_edge(2 * u + 1, 2 * v, INF);
                add_edge(2 * v + 1, 2 * u, INF);
            }

    int flow = 0;
    for (;;) {
        std::vector<int> pred_edge(total, -1);
        std::queue<int> q;
        q.push(S);
        std::vector<char> seen(total, 0);
        seen[S] = 1;
        while (!q.empty() && !seen[T]) {
            int a = q.front();
            q.pop();
            for (int ei : head[a]) {
                if (cap[ei] <= 0 || seen[to[ei]]) continue;
                seen[to[ei]] = 1;
                pred_edge[to[ei]] = ei;
                q.push(to[ei]);
            }
        }
        if (!seen[T]) break;
        int bottleneck = INF;
        for (int node = T; node != S;) {
            int ei = pred_edge[node];
            bottleneck = std::min(bottleneck, cap[ei]);
            node = to[ei ^ 1];
        }
        for (int node = T; node != S;) {
            int ei = pred_edge[node];
            cap[ei] -= bottleneck;
            cap[ei ^ 1] += bottleneck;
            node = to[ei ^ 1];
        }
        flow += bottleneck;
        if (flow >= INF) throw std::logic_error("ends are not separable by a finite vertex cut");
    }

    // Residual reachability from S identifies the cut.
    std::vector<char> reach(total, 0);
    std::queue<int> q;
    q.push(S);
    reach[S] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int ei : head[a]) {
            if (cap[ei] <= 0 || reach[to[ei]]) continue;
            reach[to[ei]] = 1;
            q.push(to[ei]);
        }
    }
    VertexCut out;
    out.value = flow;
    for (int v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) out.cut_vertices.push_back(v);
    return out;
}

}  // namespace

KappaResult kappa_infinity(const PeriodicPresentation& p, int max_rounds) {
    int reach = p.max_jump();
    if (reach == 0) throw std::invalid_argument("presentation has no jumps: not two-ended");

    auto solve = [&](int half) -> std::pair<VertexCut, WindowGraph> {
        WindowGraph w = window(p, half);
        if (!is_connected(w.graph)) throw std::invalid_argument("presentation window is disconnected");
        int n = w.graph.vertex_count();
        std::vector<char> src(n, 0), snk(n, 0);
        for (int v = 0; v < n; ++v) {
            if (w.layer_of[v] <= -half + reach) src[v] = 1;
            if (w.layer_of[v] >= half - reach) snk[v] = 1;
        }
        return {min_vertex_cut(w.graph, src, snk), w};
    };

    int half = std::max(3 * reach + 3, 6);
    int step = std::max(2, reach);
    // The terminal zones carry infinite capacity, so a minimum cut consists of
    // interior vertices only; reject any cut touching the frontier or the
    // terminal layers.
    auto interior_cut = [&](const VertexCut& c, const WindowGraph& w) {
        for (int v : c.cut_vertices)
            if (std::abs(w.layer_of[v]) >= w.half_width - reach) return false;
        return true;
    };

    std::pair<VertexCut, WindowGraph> prev = solve(half);
    for (int round = 0; round < max_rounds; ++round) {
        int next_half = half + step;
        std::pair<VertexCut, WindowGraph> cur = solve(next_half);
        if (cur.first.value == prev.first.value && interior_cut(prev.first, prev.second) &&
            interior_cut(cur.first, cur.second)) {
            KappaResult res;
            res.value = cur.first.value;
            res.window = cur.second;
            res.cut = VertexSet::from_unsorted(cur.first.cut_vertices, cur.second.graph.vertex_count());
            return res;
        }
        prev = std::move(cur);
        half = next_half;
    }
    throw BudgetError("cut did not stabilize");
}

// ------------------------------------------------------------ interval cover

std::optional<IntervalCover> interval_cover(const Graph& g, const RingCertificate& cert, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("empty set");
    if (2 * a.size() > g.vertex_count()) throw std::invalid_argument("|A| exceeds half the vertices");
    if (!check_connected_with_boundary(g, a)) throw std::invalid_argument("G[A ∪ ∂A] is not connected");

    const CyclicSystem& cyc = cert.cyclic;
    int b = cyc.block_count();
    std::vector<char> meets(b, 0);
    for (int v : a) meets[cyc.system.block_of[v]] = 1;
    std::vector<int> positions;
    for (int pos = 0; pos < b; ++pos)
        if (meets[cyc.order[pos]]) positions.push_back(pos);
    if (static_cast<int>(positions.size()) == b) return std::nullopt;  // wraps fully

    // The smallest covering interval is the circle minus the largest gap.
    int m = static_cast<int>(positions.size());
    int start = positions[0], end = positions[0];
    if (m > 1) {
        int best_gap = -1, gap_after = -1;
        for (int i = 0; i < m; ++i) {
            int cur = positions[i];
            int nxt = positions[(i + 1) % m];
            int gap = (nxt - cur + b) % b - 1;
            if (gap > best_gap) {
                best_gap = gap;
                gap_after = i;
            }
        }
        start = positions[(gap_after + 1) % m];
        end = positions[gap_after];
    }
    IntervalCover out;
    std::vector<int> q_ids;
    for (int pos = start;; pos = (pos + 1) % b) {
        int blk = cyc.order[pos];
        out.interval.push_back(blk);
        const auto& ids = cyc.system.blocks[blk].ids();
        q_ids.insert(q_ids.end(), ids.begin(), ids.end());
        if (pos == end) break;
    }
    out.q = VertexSet::from_unsorted(std::move(q_ids), g.vertex_count());
    out.excess = out.q.size() - a.size();
    long long k = boundary_profile(g, a).vertex_boundary.size();
    long long s = cert.s, t = cert.t;
    out.bound = 2 * s * s * t * t * k + 2 * s * t * k;
    out.within_bound = out.excess <= out.bound;
    return out;
}

}  // namespace vtsep
