#include "vtsep/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace vtsep {

namespace {

constexpr int kConnectedLimit = 30;
constexpr int kUnrestrictedLimit = 20;
constexpr int kExplorerLimit = 62;  // budget-capped enumeration fits a word

struct MaskContext {
    int n = 0;
    bool directed = false;
    std::vector<uint64_t> nbr;      // undirected neighborhoods (for growth/connectivity)
    std::vector<uint64_t> out_nbr;  // boundary-defining neighborhoods
    uint64_t all = 0;

    explicit MaskContext(const Graph& g) : n(g.vertex_count()), directed(g.is_directed()) {
        nbr.assign(n, 0);
        out_nbr.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int w : g.neighbors(v)) nbr[v] |= 1ULL << w;
            for (int w : g.out_neighbors(v)) out_nbr[v] |= 1ULL << w;
        }
        all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    }

    uint64_t boundary(uint64_t s) const {
        uint64_t b = 0;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            b |= out_nbr[v];
        }
        return b & ~s;
    }

    long long edge_cut(uint64_t s) const {
        long long c = 0;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            c += std::popcount(out_nbr[v] & ~s);
        }
        return c;
    }
};

// Enumerates connected vertex sets once each: roots in increasing order, each
// extension step branches on taking/forbidding a boundary vertex.  The emit
// callback returns false to abort the whole enumeration.
void enumerate_connected(const MaskContext& ctx, int max_size,
                         const std::function<bool(uint64_t)>& emit) {
    std::function<bool(uint64_t, uint64_t, int)> rec = [&](uint64_t s, uint64_t banned, int root) {
        if (!emit(s)) return false;
        if (std::popcount(s) >= max_size) return true;
        uint64_t frontier = 0;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            frontier |= ctx.nbr[v];
        }
        frontier &= ~s & ~banned & ctx.all;
        frontier &= ~((1ULL << root) - 1);  // only vertices >= root keep the root minimal
        uint64_t local_ban = banned;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            if (!rec(s | (1ULL << v), local_ban, root)) return false;
            local_ban |= 1ULL << v;
        }
        return true;
    };
    for (int root = 0; root < ctx.n; ++root)
        if (!rec(1ULL << root, 0, root)) return;
}

}  // namespace

std::vector<ProfileEntry> min_boundary_profile(const Graph& g, const ProfileOptions& opt) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    if (opt.connected_only && n > kConnectedLimit)
        throw BudgetError("connected enumeration limited to " + std::to_string(kConnectedLimit) + " vertices");
    if (!opt.connected_only && n > kUnrestrictedLimit)
        throw BudgetError("unrestricted enumeration limited to " + std::to_string(kUnrestrictedLimit) +
                          " vertices");
    int max_size = opt.max_size > 0 ? std::min(opt.max_size, n - 1) : n - 1;

    MaskContext ctx(g);
    std::vector<ProfileEntry> prof(max_size + 1);
    for (int s = 0; s <= max_size; ++s) {
        prof[s].size = s;
        prof[s].min_vertex_boundary = std::numeric_limits<int>::max();
        prof[s].min_edge_cut = std::numeric_limits<long long>::max();
    }

    auto consider = [&](uint64_t s) {
        int size = std::popcount(s);
        if (size == 0 || size > max_size) return true;
        uint64_t bd = ctx.boundary(s);
        if (opt.exclude_closure_full && (s | bd) == ctx.all) return true;
        ProfileEntry& e = prof[size];
        e.any = true;
        int vb = std::popcount(bd);
        long long ec = ctx.edge_cut(s);
        if (vb < e.min_vertex_boundary || ec < e.min_edge_cut) {
            std::vector<char> m(ctx.n, 0);
            for (int v = 0; v < ctx.n; ++v) m[v] = (s >> v) & 1;
            VertexSet witness = VertexSet::from_mask(m);
            if (vb < e.min_vertex_boundary) {
                e.min_vertex_boundary = vb;
                e.boundary_witness = witness;
            }
            if (ec < e.min_edge_cut) {
                e.min_edge_cut = ec;
                e.edge_witness = witness;
            }
        }
        return true;
    };

    if (opt.connected_only) {
        enumerate_connected(ctx, max_size, consider);
    } else {
        for (uint64_t s = 1; s <= ctx.all; ++s) consider(s);
    }
    return prof;
}

BoundReport bound_report(const Graph& g, const std::vector<Permutation>& gens) {
    int n = g.vertex_count();
    auto orb = orbit_transitivity(n, gens, &g);
    if (!orb.transitive) throw std::invalid_argument("transitivity evidence fails: action has multiple orbits");

    BoundReport rep;
    Graph und = g.underlying_undirected();
    auto und_degree = und.regular_degree();
    if (!und_degree) throw std::invalid_argument("vertex-transitive input is not regular");
    rep.degree = *und_degree;

    auto add = [&](TheoremCheck c) {
        rep.all_hold = rep.all_hold && c.holds;
        rep.checks.push_back(std::move(c));
    };

    if (!g.is_directed()) {
        int d = rep.degree;
        // Edge connectivity: min |δA| over nonempty proper A is attained on a
        // connected A, so connected enumeration is exact.
        {
            ProfileOptions po;
            po.connected_only = true;
            auto prof = min_boundary_profile(g, po);
            long long best = std::numeric_limits<long long>::max();
            VertexSet wit;
            for (const auto& e : prof)
                if (e.any && e.min_edge_cut < best) {
                    best = e.min_edge_cut;
                    wit = e.edge_witness;
                }
            TheoremCheck c;
            c.name = "edge-cut >= d";
            c.observed = best;
            c.bound_times3 = 3LL * d;
            c.holds = best >= d;
            c.witness = wit;
            c.detail = "min |dA| = " + std::to_string(best) + ", d = " + std::to_string(d);
            add(std::move(c));
        }
        // Vertex boundary over arbitrary sets with A ∪ ∂A != V.
        {
            ProfileOptions po;
            po.connected_only = false;
            po.exclude_closure_full = true;
            auto prof = min_boundary_profile(g, po);
            long long best = std::numeric_limits<long long>::max();
            VertexSet wit;
            for (const auto& e : prof)
                if (e.any && e.min_vertex_boundary < best) {
                    best = e.min_vertex_boundary;
                    wit = e.boundary_witness;
                }
            TheoremCheck c;
            c.name = "vertex boundary >= 2(d+1)/3";
            c.observed = best;
            c.bound_times3 = 2LL * (d + 1);
            c.holds = 3 * best >= 2LL * (d + 1);
            c.witness = wit;
            c.detail = "min |bA| = " + std::to_string(best) + ", 2(d+1)/3 = " + std::to_string(2.0 * (d + 1) / 3);
            add(std::move(c));
        }
    } else {
        auto outdeg = g.out_degree(0);
        for (int v = 0; v < n; ++v)
            if (g.out_degree(v) != outdeg) throw std::invalid_argument("digraph is not out-regular");
        ProfileOptions po;
        po.connected_only = false;
        po.exclude_closure_full = true;
        auto prof = min_boundary_profile(g, po);
        long long best = std::numeric_limits<long long>::max();
        VertexSet wit;
        for (const auto& e : prof)
            if (e.any && e.min_vertex_boundary < best) {
                best = e.min_vertex_boundary;
                wit = e.boundary_witness;
            }
        TheoremCheck c;
        c.name = "out-boundary >= (d+1)/2";
        c.observed = best;
        c.bound_times3 = 0;
        c.holds = 2 * best >= outdeg + 1;
        c.witness = wit;
        c.detail = "min |b+A| = " + std::to_string(best) + ", (d+1)/2 = " + std::to_string((outdeg + 1) / 2.0);
        add(std::move(c));
    }

    // Per-set diameter bound on connected sets up to half the graph.
    {
        const Graph& h = g.is_directed() ? und : g;
        MaskContext ctx(h);
        std::vector<std::vector<int>> dist(n);
        for (int v = 0; v < n; ++v) {
            DistanceMap dm = bfs_distances(h, std::vector<int>{v});
            dist[v].resize(n);
            for (int w = 0; w < n; ++w) dist[v][w] = dm.get(w).value_or(-1);
        }
        bool ok = true;
        VertexSet worst;
        long long worst_lhs = 0, worst_rhs = -1;  // compare |∂A|(diam+1) vs |A|
        enumerate_connected(ctx, n / 2, [&](uint64_t s) {
            int size = std::popcount(s);
            if (size == 0 || 2 * size > n) return true;
            std::vector<int> members;
            for (uint64_t rest = s; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                members.push_back(v);
            }
            int diam = 0;
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    diam = std::max(diam, dist[members[i]][members[j]]);
            long long lhs = static_cast<long long>(std::popcount(ctx.boundary(s))) * (diam + 1);
            if (lhs < size) {
                ok = false;
                worst = VertexSet::from_unsorted(members, n);
                worst_lhs = lhs;
                worst_rhs = size;
            }
            return true;
        });
        TheoremCheck c;
        c.name = "|bA|(diam(A)+1) >= |A|";
        c.holds = ok;
        c.observed = worst_lhs;
        c.bound_times3 = worst_rhs;
        c.witness = worst;
        c.detail = ok ? "no violating set" : "violated";
        add(std::move(c));
    }
    return rep;
}

std::vector<int> sumset(const GroupTable& tbl, const std::vector<int>& a, const std::vector<int>& b,
                        bool left) {
    std::vector<char> seen(tbl.order(), 0);
    for (int x : a)
        for (int y : b) {
            int p = left ? tbl.mul(x, y) : tbl.mul(y, x);
            seen[p] = 1;
        }
    std::vector<int> out;
    for (int v = 0; v < tbl.order(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

CauchyDavenportCheck check_cauchy_davenport(const GroupTable& tbl, const std::vector<int>& a,
                                            const std::vector<int>& b) {
    CauchyDavenportCheck c;
    c.applicable = is_prime(tbl.order());
    if (a.empty() || b.empty()) throw std::invalid_argument("operands must be nonempty");
    c.sum_size = static_cast<int>(sumset(tbl, a, b, true).size());
    c.lower = std::min<long long>(tbl.order(), static_cast<long long>(a.size()) + b.size() - 1);
    c.holds = !c.applicable || c.sum_size >= c.lower;
    return c;
}

RatioResult depth_ratio_explorer(const Graph& g, long long budget, unsigned long long seed) {
    int n = g.vertex_count();
    RatioResult best;
    best.num = std::numeric_limits<long long>::max();
    best.den = 1;

    auto offer = [&](const VertexSet& a, int bd, int dep) {
        long long num = static_cast<long long>(bd) * dep;
        long long den = a.size();
        if (num * best.den < best.num * den) {
            best.num = num;
            best.den = den;
            best.witness = a;
        }
    };

    const Graph h = g.is_directed() ? g.underlying_undirected() : g;
    if (n <= kExplorerLimit) {
        MaskContext ctx(h);
        std::vector<std::vector<int>> dist(n);
        for (int v = 0; v < n; ++v) {
            DistanceMap dm = bfs_distances(h, std::vector<int>{v});
            dist[v].resize(n);
            for (int w = 0; w < n; ++w) dist[v][w] = dm.get(w).value_or(-1);
        }
        long long count = 0;
        bool capped = false;
        enumerate_connected(ctx, n / 2, [&](uint64_t s) {
            int size = std::popcount(s);
            if (size == 0 || 2 * size > n) return true;
            if (++count > budget) {
                capped = true;
                return false;
            }
            int bd = std::popcount(ctx.boundary(s));
            int dep = 0;
            for (uint64_t rest = s; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                int near = std::numeric_limits<int>::max();
                for (int w = 0; w < n; ++w)
                    if (!((s >> w) & 1) && dist[v][w] >= 0) near = std::min(near, dist[v][w]);
                dep = std::max(dep, near);
            }
            std::vector<char> m(n, 0);
            for (int v = 0; v < n; ++v) m[v] = (s >> v) & 1;
            offer(VertexSet::from_mask(m), bd, dep);
            return true;
        });
        best.examined = std::min(count, budget);
        best.exhaustive = !capped;
        return best;
    }

    // Sampled mode: seeded random connected growth.
    unsigned long long state = seed ? seed : 0x9e3779b9ULL;
    auto rnd = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (long long it = 0; it < budget; ++it) {
        int start = static_cast<int>(rnd() % n);
        int target = 1 + static_cast<int>(rnd() % std::max(1, n / 2));
        std::vector<char> in_a(n, 0);
        std::vector<int> members{start}, frontier{start};
        in_a[start] = 1;
        while (static_cast<int>(members.size()) < target && !frontier.empty()) {
            int idx = static_cast<int>(rnd() % frontier.size());
            int v = frontier[idx];
            std::vector<int> fresh;
            for (int w : h.neighbors(v))
                if (!in_a[w]) fresh.push_back(w);
            if (fresh.empty()) {
                frontier[idx] = frontier.back();
                frontier.pop_back();
                continue;
            }
            int w = fresh[rnd() % fresh.size()];
            in_a[w] = 1;
            members.push_back(w);
            frontier.push_back(w);
        }
        if (2 * static_cast<int>(members.size()) > n) continue;
        VertexSet a = VertexSet::from_unsorted(members, n);
        int bd = boundary_profile(h, a).vertex_boundary.size();
        offer(a, bd, depth(h, a));
        ++best.examined;
    }
    best.exhaustive = false;
    return best;
}

}  // namespace vtsep
