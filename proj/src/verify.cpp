#include "vtsep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

namespace vtsep {

std::string to_string(DichotomyCase c) {
    switch (c) {
        case DichotomyCase::shallow: return "shallow";
        case DichotomyCase::ring_interval: return "ring_interval";
        case DichotomyCase::precondition_failed: return "precondition_failed";
        case DichotomyCase::inconclusive: return "inconclusive";
        case DichotomyCase::violation: return "VIOLATION";
    }
    return "?";
}

std::string to_string(Cor19Outcome c) {
    switch (c) {
        case Cor19Outcome::ring_like: return "ring_like";
        case Cor19Outcome::treewidth_at_least_k: return "treewidth_at_least_k";
        case Cor19Outcome::small_degree_diameter: return "small_degree_diameter";
        case Cor19Outcome::violation: return "VIOLATION";
        case Cor19Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

// ------------------------------------------------------- structure dichotomy

DichotomyOutcome main_dichotomy(const Graph& g, const std::vector<Permutation>& gens, const VertexSet& a,
                                const MainOptions& opt) {
    if (g.is_directed()) throw std::invalid_argument("dichotomy runs on undirected graphs");
    if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe does not match graph");

    DichotomyOutcome out;
    out.a_size = a.size();
    auto fail = [&](const std::string& why) {
        out.outcome = DichotomyCase::precondition_failed;
        out.failed_precondition = why;
        return out;
    };
    if (a.empty()) return fail("A is empty");
    if (2LL * a.size() > g.vertex_count()) return fail("|A| above half the vertices");

    out.k = boundary_profile(g, a).vertex_boundary.size();
    if (out.k == 0) return fail("boundary of A is empty");
    if (!check_connected_with_boundary(g, a)) return fail("G[A u dA] is disconnected");

    out.diameter = opt.known_diameter >= 0 ? opt.known_diameter : graph_diameter(g);
    long long k = out.k;
    if (out.diameter < 31 * (k + 1) * (k + 1)) return fail("diameter below 31(k+1)^2");

    // Case (i): shallow.
    out.a_depth = depth(g, a);
    out.depth_ok = out.a_depth <= out.k;
    out.size_ok = out.a_size <= 2 * k * k * k + k * k;
    auto deg = g.regular_degree();
    out.degree = deg.value_or(-1);
    out.degree_ok = deg.has_value() && 2LL * *deg <= 3 * k - 2;
    out.shallow_holds = out.depth_ok && out.size_ok && out.degree_ok;

    // Case (ii): ring-like with an efficient interval.
    int max_t = out.k / 2;
    RingSearchResult local;
    const RingSearchResult* ring = opt.known_ring;
    if (max_t < 1) {
        // st <= k/2 < 1 admits no positive parameters at all.
        out.ring_search_exhaustive = true;
    } else {
        if (!ring) {
            local = detect_ring(g, gens, max_t);
            ring = &local;
        }
        out.ring_search_exhaustive = ring->exhaustive;
        if (ring->cert && 2LL * ring->cert->s * ring->cert->t <= k) {
            auto cover = interval_cover(g, *ring->cert, a);
            if (cover && 2 * cover->excess <= k * k * k + 2 * k * k) {
                out.ring_holds = true;
                out.ring = ring->cert;
                out.cover = cover;
            }
        }
    }

    if (out.shallow_holds) {
        out.outcome = DichotomyCase::shallow;
        out.both_hold = out.ring_holds;
    } else if (out.ring_holds) {
        out.outcome = DichotomyCase::ring_interval;
    } else {
        out.outcome = out.ring_search_exhaustive ? DichotomyCase::violation : DichotomyCase::inconclusive;
    }
    return out;
}

// -------------------------------------------------------------------- scans

namespace {

struct CandidateDesc {
    int kind = 0;  // 0 interval, 1 perturbed interval, 2 seed
    int pos = 0, len = 0, gap = 0, seed = 0;
};

VertexSet interval_candidate(const Graph& g, const RingCertificate& cert, int pos, int len, int gap) {
    const CyclicSystem& cyc = cert.cyclic;
    int b = cyc.block_count();
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(len) * cert.s);
    for (int i = 0; i < len; ++i) {
        int blk = cyc.order[(pos + i) % b];
        const auto& members = cyc.system.blocks[blk].ids();
        ids.insert(ids.end(), members.begin(), members.end());
    }
    VertexSet a = VertexSet::from_unsorted(std::move(ids), g.vertex_count());
    if (gap >= 0) {
        int blk = cyc.order[(pos + gap) % b];
        a = set_difference(a, cyc.system.blocks[blk]);
    }
    return a;
}

}  // namespace

ScanSummary scan_main(const Graph& g, const std::vector<Permutation>& gens, int k_max, long long budget,
                      int jobs, const ScanSink* sink) {
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    ScanSummary sum;
    long long diam = graph_diameter(g);
    RingSearchResult ring = detect_ring(g, gens, std::max(1, k_max / 2));

    // Candidate descriptors: block intervals, their one-block perturbations,
    // and small connected seeds.
    std::vector<CandidateDesc> descs;
    if (ring.cert) {
        int b = ring.cert->cyclic.block_count();
        int max_len = b / 2;
        for (int pos = 0; pos < b && static_cast<long long>(descs.size()) < budget; ++pos) {
            for (int len = 1; len <= max_len; ++len) {
                descs.push_back({0, pos, len, -1, 0});
                if (static_cast<long long>(descs.size()) >= budget) break;
            }
        }
        if (ring.cert->s == 1) {
            for (int pos = 0; pos < b && static_cast<long long>(descs.size()) < budget; ++pos) {
                for (int len = 3; len <= max_len; len += 1) {
                    std::set<int> gaps;
                    for (int gap : {1, len / 4, len / 2, (3 * len) / 4, len - 2})
                        if (gap >= 1 && gap <= len - 2) gaps.insert(gap);
                    for (int gap : gaps) descs.push_back({1, pos, len, gap, 0});
                    if (static_cast<long long>(descs.size()) >= budget) break;
                }
            }
        }
    }
    std::vector<VertexSet> seeds;
    for (int v = 0; v < g.vertex_count(); ++v) seeds.push_back(VertexSet::of({v}, g.vertex_count()));
    for (auto [u, v] : g.underlying_undirected().edge_list())
        seeds.push_back(VertexSet::of({u, v}, g.vertex_count()));
    for (int i = 0; i < static_cast<int>(seeds.size()) && static_cast<long long>(descs.size()) < budget; ++i)
        descs.push_back({2, 0, 0, -1, i});
    sum.budget_exhausted = static_cast<long long>(descs.size()) >= budget;

    long long total = static_cast<long long>(descs.size());
    jobs = std::max(1, jobs);
    std::atomic<long long> stop_at{total};

    struct Partial {
        long long candidates = 0;
        long long skipped = 0;
        long long both = 0;
        std::map<DichotomyCase, long long> tally;
        long long violation_index = -1;
        DichotomyOutcome violation;
        VertexSet witness;
    };
    std::vector<Partial> parts(jobs);

    MainOptions mo;
    mo.known_diameter = diam;
    mo.known_ring = &ring;
    std::mutex sink_mutex;

    auto worker = [&](int w) {
        Partial& part = parts[w];
        for (long long i = w; i < total; i += jobs) {
            if (i >= stop_at.load(std::memory_order_relaxed)) break;
            const CandidateDesc& sp = descs[i];
            VertexSet a = sp.kind == 2 ? seeds[sp.seed]
                                       : interval_candidate(g, *ring.cert, sp.pos, sp.len,
                                                            sp.kind == 1 ? sp.gap : -1);
            if (a.empty() || 2LL * a.size() > g.vertex_count()) continue;
            if (boundary_profile(g, a).vertex_boundary.size() > k_max) {
                ++part.skipped;
                continue;
            }
            DichotomyOutcome oc = main_dichotomy(g, gens, a, mo);
            if (sink && *sink) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                (*sink)(i, a, oc);
            }
            ++part.candidates;
            ++part.tally[oc.outcome];
            if (oc.both_hold) ++part.both;
            if (oc.outcome == DichotomyCase::violation) {
                part.violation_index = i;
                part.violation = oc;
                part.witness = a;
                long long cur = stop_at.load();
                while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }

    long long best_violation = -1;
    for (const auto& part : parts) {
        sum.candidates += part.candidates;
        sum.skipped_large_boundary += part.skipped;
        sum.both_cases += part.both;
        for (auto [c, v] : part.tally) sum.tally[c] += v;
        if (part.violation_index >= 0 &&
            (best_violation < 0 || part.violation_index < best_violation)) {
            best_violation = part.violation_index;
            sum.violation = part.violation;
            sum.violation_witness = part.witness;
        }
    }
    return sum;
}

// ------------------------------------------------------------------ growth

GrowthReport growth_cor17_graph(const Graph& g, const VertexSet& frontier, int center, int n_max) {
    g.check_vertex(center);
    if (n_max < 0) throw std::invalid_argument("negative radius");
    if (!frontier.empty()) {
        DistanceMap d = bfs_distances(g, std::vector<int>{center});
        for (int v : frontier) {
            auto dv = d.get(v);
            if (dv && *dv <= n_max)
                throw std::invalid_argument("frontier contamination: truncated vertex " + std::to_string(v) +
                                            " inside the radius-" + std::to_string(n_max) + " ball");
        }
    }
    GrowthReport rep;
    rep.growth = ball_growth(g, center, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (2LL * rep.growth[n] <= static_cast<long long>(n) * (n + 1)) {
            rep.all_strict = false;
            if (rep.first_failure < 0) rep.first_failure = n;
        }
    }
    return rep;
}

GrowthReport growth_cor17_periodic(const PeriodicPresentation& p, int n_max) {
    GrowthReport rep;
    int reach = std::max(1, p.max_jump());
    rep.ring = detect_ring_periodic(p, std::max(4, 2 * reach * p.cell.vertex_count()));
    rep.ring_exempt = rep.ring.has_value();

    // Growth measured from a middle vertex of a window wide enough for n_max.
    int half = n_max * reach + 2 * reach + 2;
    WindowGraph w = window(p, half);
    GrowthReport inner = growth_cor17_graph(w.graph, w.frontier, w.vertex_id(0, 0), n_max);
    rep.growth = inner.growth;
    rep.all_strict = inner.all_strict;
    rep.first_failure = inner.first_failure;

    // Depth-vs-boundary clause on a layer interval.
    int m = 12 * reach;
    int clause_half = m + 6 * reach + 6;
    WindowGraph cw = window(p, clause_half);
    std::vector<int> ids;
    for (int layer = 0; layer < m; ++layer)
        for (int v = 0; v < p.cell.vertex_count(); ++v) ids.push_back(cw.vertex_id(v, layer));
    VertexSet a = VertexSet::from_unsorted(std::move(ids), cw.graph.vertex_count());
    rep.clause_checked = true;
    rep.clause_boundary = boundary_profile(cw.graph, a).vertex_boundary.size();
    rep.clause_depth = depth(cw.graph, a);
    rep.clause_applicable = rep.clause_depth > rep.clause_boundary;
    if (rep.clause_applicable)
        rep.clause_holds =
            rep.ring.has_value() && 2LL * rep.ring->s * rep.ring->t <= rep.clause_boundary;
    return rep;
}

// ---------------------------------------------------------------- Eulerian

EulerianOutcome eulerian_cor110(const Graph& dg, const std::vector<Permutation>& gens, const VertexSet& a) {
    if (!dg.is_directed()) throw std::invalid_argument("expected a digraph");
    for (int v = 0; v < dg.vertex_count(); ++v) {
        if (dg.in_degree(v) != dg.out_degree(v))
            throw std::invalid_argument(
                "not Eulerian: vertex " + std::to_string(v) + " has out-degree " +
                std::to_string(dg.out_degree(v)) + " and in-degree " + std::to_string(dg.in_degree(v)) +
                "; without balance no such bound holds (a directed path in an out-degree-1 tree "
                "orientation keeps out-boundary 1 at arbitrary size)");
    }
    auto orb = orbit_transitivity(dg.vertex_count(), gens, &dg);
    if (!orb.transitive) throw std::invalid_argument("transitivity evidence fails");

    EulerianOutcome out;
    BoundaryProfile bp = boundary_profile(dg, a);
    out.k = bp.out_boundary.size();
    long long k = out.k;
    Graph und = dg.underlying_undirected();
    out.underlying_boundary = boundary_profile(und, a).vertex_boundary.size();
    out.derived_chain_ok = out.underlying_boundary <= 2 * k * k;
    out.size_ok = 2LL * a.size() <= dg.vertex_count();
    out.closure_connected = !a.empty() && check_connected_with_boundary(und, a);
    out.diameter = graph_diameter(und);
    long long need = 2 * k * k + 1;
    out.diameter_ok = out.diameter >= 31 * need * need;

    if (!out.size_ok || !out.closure_connected) {
        out.outcome = DichotomyCase::precondition_failed;
        return out;
    }

    long long k4 = k * k * k * k, k6 = k4 * k * k;
    out.case_i = a.size() <= 16 * k6 + 4 * k4;

    RingSearchResult ring = detect_ring(und, gens, std::max<int>(1, static_cast<int>(k * k)));
    if (ring.cert && static_cast<long long>(ring.cert->s) * ring.cert->t <= k * k) {
        auto cover = interval_cover(und, *ring.cert, a);
        if (cover && cover->excess <= 4 * k6 + 4 * k4) {
            out.case_ii = true;
            out.ring = ring.cert;
            out.cover = cover;
        }
    }

    if (out.case_i)
        out.outcome = DichotomyCase::shallow;
    else if (out.case_ii)
        out.outcome = DichotomyCase::ring_interval;
    else
        out.outcome = ring.exhaustive ? DichotomyCase::violation : DichotomyCase::inconclusive;
    return out;
}

// ------------------------------------------------------------------- cor19

Cor19Report cor19_check(const Graph& g, const std::vector<Permutation>& gens, int k,
                        const TreeDecomposition* td_hint, long long budget) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    Cor19Report rep;
    rep.max_degree = g.max_degree();
    rep.diameter = graph_diameter(g);

    RingSearchResult ring = detect_ring(g, gens, std::max(1, k / 2));
    rep.ring_exhaustive = ring.exhaustive;
    if (ring.cert && 2LL * ring.cert->s * ring.cert->t <= k) {
        rep.ring = ring.cert;
        rep.outcome = Cor19Outcome::ring_like;
        return rep;
    }

    if (rep.max_degree <= k - 1 && rep.diameter < 31LL * (k + 1) * (k + 1)) {
        rep.outcome = Cor19Outcome::small_degree_diameter;
        return rep;
    }

    if (td_hint) {
        int width = verify_td(g, *td_hint);
        if (width < k) {
            rep.found_width = width;
            rep.width_search_complete = true;
        }
    }
    if (!rep.found_width) {
        TdSearchResult sr = greedy_td_search(g, k, budget);
        rep.width_search_complete = sr.complete;
        if (sr.td) rep.found_width = verify_td(g, *sr.td);
        if (!sr.td && sr.complete) {
            rep.outcome = Cor19Outcome::treewidth_at_least_k;
            return rep;
        }
    }

    if (rep.found_width) {
        // All three clauses failed only if the ring search was complete.
        rep.outcome = rep.ring_exhaustive ? Cor19Outcome::violation : Cor19Outcome::inconclusive;
        return rep;
    }
    rep.outcome = Cor19Outcome::inconclusive;
    return rep;
}

// -------------------------------------------------------------------- thm3

namespace {

Thm3Report thm3_arith(long long a_size, long long ba_size) {
    Thm3Report rep;
    rep.a_size = a_size;
    rep.ba_size = ba_size;
    rep.m = ba_size - a_size;
    // |BA| < |A| + |A|^{1/3}/2  <=>  8 m^3 < |A| for integer m.
    rep.hypothesis_holds = 8 * rep.m * rep.m * rep.m < rep.a_size;
    return rep;
}

}  // namespace

Thm3Report thm3_check_table(const GroupTable& tbl, const std::vector<int>& b_set,
                            const std::vector<int>& a_set) {
    std::vector<char> in_b(tbl.order(), 0);
    for (int x : b_set) {
        if (x < 0 || x >= tbl.order()) throw std::invalid_argument("element out of range");
        in_b[x] = 1;
    }
    if (!in_b[tbl.identity()]) throw std::invalid_argument("B must contain the identity");
    for (int x : b_set)
        if (!in_b[tbl.inv(x)]) throw std::invalid_argument("B must be symmetric (closed under inverses)");
    // B must generate the group.
    {
        std::vector<char> reach(tbl.order(), 0);
        std::vector<int> stack{tbl.identity()};
        reach[tbl.identity()] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int b : b_set) {
                int y = tbl.mul(b, x);
                if (!reach[y]) {
                    reach[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        for (int v = 0; v < tbl.order(); ++v)
            if (!reach[v]) throw std::invalid_argument("B does not generate the group");
    }

    std::vector<int> ba = sumset(tbl, b_set, a_set, true);
    Thm3Report rep = thm3_arith(static_cast<long long>(a_set.size()), static_cast<long long>(ba.size()));
    rep.finite_group = true;
    if (!rep.hypothesis_holds) return rep;

    // Structure evidence: ring certificate on the Cayley graph, N = elements
    // whose right translation fixes every block.
    std::vector<int> connection;
    for (int x : b_set)
        if (x != tbl.identity()) connection.push_back(x);
    GeneratedGraph cg = make_cayley(tbl, connection, false);
    RingSearchResult ring = detect_ring(cg.graph, cg.transitivity_gens, std::max(2, tbl.order() / 2));
    if (!ring.cert) return rep;

    const BlockSystem& sys = ring.cert->cyclic.system;
    std::vector<int> n_elems;
    for (int gm = 0; gm < tbl.order(); ++gm) {
        bool fixes = true;
        for (int x = 0; x < tbl.order() && fixes; ++x)
            if (sys.block_of[tbl.mul(x, gm)] != sys.block_of[x]) fixes = false;
        if (fixes) n_elems.push_back(gm);
    }
    rep.structure_found = true;
    rep.n_size = static_cast<long long>(n_elems.size());
    rep.n_small = 64 * rep.n_size * rep.n_size * rep.n_size < rep.a_size;

    // Classify the block action of the full group (isomorphic to G/N).
    std::set<std::vector<int>> actions;
    for (int gm = 0; gm < tbl.order(); ++gm) {
        std::vector<int> act(sys.block_count(), -1);
        for (int x = 0; x < tbl.order(); ++x) act[sys.block_of[x]] = sys.block_of[tbl.mul(x, gm)];
        actions.insert(act);
    }
    auto order_of = [&](const std::vector<int>& act) {
        std::vector<int> cur(act.size());
        for (size_t i = 0; i < act.size(); ++i) cur[i] = static_cast<int>(i);
        for (int o = 1;; ++o) {
            std::vector<int> nxt(act.size());
            for (size_t i = 0; i < act.size(); ++i) nxt[i] = act[cur[i]];
            cur = nxt;
            bool ident = true;
            for (size_t i = 0; i < act.size(); ++i)
                if (cur[i] != static_cast<int>(i)) ident = false;
            if (ident) return o;
        }
    };
    size_t q_order = actions.size();
    bool cyclic = false;
    for (const auto& act : actions)
        if (order_of(act) == static_cast<int>(q_order)) cyclic = true;
    if (cyclic) {
        rep.quotient_kind = "cyclic";
    } else {
        // Dihedral: half the elements form a cyclic subgroup inverted by the rest.
        bool dihedral = false;
        if (q_order % 2 == 0) {
            for (const auto& act : actions)
                if (order_of(act) == static_cast<int>(q_order / 2)) dihedral = true;
        }
        rep.quotient_kind = dihedral ? "dihedral" : "neither";
    }
    return rep;
}

Thm3Report thm3_check_periodic(const PeriodicPresentation& p, int a_layers) {
    if (a_layers < 1) throw std::invalid_argument("interval must have at least one layer");
    int c = p.cell.vertex_count();
    int reach = std::max(1, p.max_jump());
    int half = a_layers + 4 * reach + 4;
    WindowGraph w = window(p, half);
    std::vector<int> ids;
    for (int layer = 0; layer < a_layers; ++layer)
        for (int v = 0; v < c; ++v) ids.push_back(w.vertex_id(v, layer));
    VertexSet a = VertexSet::from_unsorted(std::move(ids), w.graph.vertex_count());

    long long boundary = boundary_profile(w.graph, a).vertex_boundary.size();
    Thm3Report rep = thm3_arith(a.size(), a.size() + boundary);
    rep.finite_group = false;
    if (!rep.hypothesis_holds) return rep;

    auto cert = detect_ring_periodic(p, std::max(4, 2 * reach * c));
    if (cert) {
        rep.structure_found = true;
        rep.n_size = cert->s;  // |N| is at most the block size
        rep.n_small = 64 * rep.n_size * rep.n_size * rep.n_size < rep.a_size;
        // The shift action on the two-way block order is a translation group.
        rep.quotient_kind = "cyclic";
    }
    return rep;
}

Thm3Report thm3_check_window(const Graph& g, const VertexSet& frontier, const VertexSet& a) {
    if (!sets_disjoint(a, frontier))
        throw std::invalid_argument("A touches the frontier: boundary would be truncated");
    long long boundary = boundary_profile(g, a).vertex_boundary.size();
    Thm3Report rep = thm3_arith(a.size(), a.size() + boundary);
    rep.finite_group = false;
    return rep;
}

}  // namespace vtsep
