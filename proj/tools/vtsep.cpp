// vtsep: boundary structure toolkit for vertex-transitive graphs.
//
// Exit codes: 0 checked-and-passed, 1 checked-and-failed (violation or
// nothing found), 2 usage/input error, 3 budget exhausted or inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vtsep/bounds.hpp"
#include "vtsep/covers.hpp"
#include "vtsep/generators.hpp"
#include "vtsep/io.hpp"
#include "vtsep/ringstruct.hpp"
#include "vtsep/treewidth.hpp"
#include "vtsep/tubes.hpp"
#include "vtsep/uncrossing.hpp"
#include "vtsep/verify.hpp"

using namespace vtsep;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Accumulates key/value pairs; human mode prints them as lines, tsv mode as
// exactly one header line plus one row in stable order.
class Report {
public:
    explicit Report(bool tsv) : tsv_(tsv) {}

    template <typename T>
    void add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        rows_.emplace_back(key, os.str());
    }

    void flush(std::ostream& out) const {
        if (tsv_) {
            for (size_t i = 0; i < rows_.size(); ++i) out << (i ? "\t" : "") << rows_[i].first;
            out << "\n";
            for (size_t i = 0; i < rows_.size(); ++i) out << (i ? "\t" : "") << rows_[i].second;
            out << "\n";
        } else {
            for (const auto& [k, v] : rows_) out << k << ": " << v << "\n";
        }
    }

private:
    bool tsv_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string ids_to_string(const VertexSet& s) {
    std::ostringstream os;
    bool first = true;
    for (int v : s) {
        os << (first ? "" : " ") << v;
        first = false;
    }
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) out.push_back(std::stoi(token));
    }
    return out;
}

void write_file_or_stdout(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
    } else {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write '" + path + "'");
        writer(out);
    }
}

PeriodicPresentation named_presentation(const std::string& name) {
    if (name == "ladder") return ladder_presentation();
    if (name == "path") return path_presentation();
    if (name == "squared_path") return squared_path_presentation();
    if (name == "prism_cell4") return prism_cell4_presentation();
    if (name == "figure2") return figure2_presentation();
    throw std::invalid_argument("unknown presentation '" + name + "'");
}

struct Options {
    bool tsv = false;
    long long budget = 2'000'000;
    unsigned long long seed = 0x5eed5eedULL;
    int jobs = 1;
    int window = 6;
    int kmax = 4;
    int tmax = 4;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary structure toolkit for vertex-transitive graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--tsv", opt.tsv, "machine-readable single-row output");
    app.add_option("--budget", opt.budget, "search/enumeration budget");
    app.add_option("--seed", opt.seed, "seed for sampled modes (echoed in reports)");
    app.add_option("--jobs", opt.jobs, "worker threads for scans");
    app.add_option("--window", opt.window, "window half-width for periodic inputs");
    app.add_option("--kmax", opt.kmax, "boundary-size cap for scans");
    app.add_option("--tmax", opt.tmax, "span cap for ring searches");

    // ------------------------------------------------------------------ gen
    auto* gen = app.add_subcommand("gen", "construct a graph family or presentation");
    std::string gen_kind, gen_conn, gen_out, gen_perms, gen_group = "cyclic";
    std::vector<int> gen_params;
    bool gen_directed = false;
    gen->add_option("kind", gen_kind, "circulant|cayley|prism|torus|petersen|tree_ball|figure2|periodic")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--conn", gen_conn, "connection set, comma-separated");
    gen->add_option("--group", gen_group, "cayley group: cyclic|sym (order from params)");
    gen->add_flag("--directed", gen_directed, "directed arcs");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->add_option("--perms", gen_perms, "also write the attached automorphism generators");
    std::string gen_frontier;
    gen->add_option("--frontier", gen_frontier, "also write the truncation frontier vertex set");
    std::string gen_periodic_name;
    gen->add_option("--name", gen_periodic_name, "named periodic presentation for kind=periodic");

    // ---------------------------------------------------------- basic ops
    auto* boundary = app.add_subcommand("boundary", "boundary profile of a set");
    std::string b_graph, b_set;
    boundary->add_option("graph", b_graph)->required();
    boundary->add_option("set", b_set)->required();

    auto* depth_cmd = app.add_subcommand("depth", "depth of a set");
    std::string d_graph, d_set;
    depth_cmd->add_option("graph", d_graph)->required();
    depth_cmd->add_option("set", d_set)->required();

    auto* growth = app.add_subcommand("growth", "growth function from a vertex");
    std::string g_graph;
    int g_from = 0, g_kmax = 6;
    growth->add_option("graph", g_graph)->required();
    growth->add_option("--from", g_from, "center vertex");
    growth->add_option("--radius", g_kmax, "largest radius");

    auto* aut = app.add_subcommand("aut", "automorphism generators and group order");
    std::string a_graph;
    long long a_limit = 50'000'000;
    aut->add_option("graph", a_graph)->required();
    aut->add_option("--node-limit", a_limit);

    auto* blocks = app.add_subcommand("blocks", "block systems of a transitive action");
    std::string bl_graph, bl_perms, bl_seed_pair;
    blocks->add_option("graph", bl_graph)->required();
    blocks->add_option("perms", bl_perms)->required();
    blocks->add_option("--seed-pair", bl_seed_pair, "u,v for the minimal system; omit to enumerate");

    auto* quot = app.add_subcommand("quotient", "quotient graph by a minimal block system");
    std::string q_graph, q_perms, q_seed_pair, q_out;
    quot->add_option("graph", q_graph)->required();
    quot->add_option("perms", q_perms)->required();
    quot->add_option("--seed-pair", q_seed_pair)->required();
    quot->add_option("-o,--out", q_out);

    auto* uncross = app.add_subcommand("uncross", "uncrossing inequalities for two sets");
    std::string u_graph, u_a1, u_a2;
    uncross->add_option("graph", u_graph)->required();
    uncross->add_option("a1", u_a1)->required();
    uncross->add_option("a2", u_a2)->required();

    auto* tube = app.add_subcommand("tube", "verify or discover a tube boundary partition");
    std::string t_graph, t_set, t_left, t_right;
    int t_s = 1, t_t = 1;
    tube->add_option("graph", t_graph)->required();
    tube->add_option("set", t_set)->required();
    tube->add_option("--left", t_left, "left side (omit with --right to search)");
    tube->add_option("--right", t_right);
    tube->add_option("--side-diameter", t_s, "s parameter");
    tube->add_option("--separation", t_t, "t parameter");

    auto* merge = app.add_subcommand("merge", "merge status and merged tube of two tubes");
    std::string m_graph, m_a1, m_l1, m_r1, m_a2, m_l2, m_r2;
    int m_s = 1, m_t = 1;
    merge->add_option("graph", m_graph)->required();
    merge->add_option("a1", m_a1)->required();
    merge->add_option("l1", m_l1)->required();
    merge->add_option("r1", m_r1)->required();
    merge->add_option("a2", m_a2)->required();
    merge->add_option("l2", m_l2)->required();
    merge->add_option("r2", m_r2)->required();
    merge->add_option("--side-diameter", m_s);
    merge->add_option("--separation", m_t);

    auto* ring = app.add_subcommand("ring", "search for a ring-like certificate");
    std::string r_graph, r_perms;
    ring->add_option("graph", r_graph)->required();
    ring->add_option("perms", r_perms)->required();

    auto* kappa = app.add_subcommand("kappa", "end connectivity of a periodic presentation");
    std::string k_periodic;
    kappa->add_option("periodic", k_periodic)->required();

    auto* interval = app.add_subcommand("interval", "interval cover of a set in a detected ring");
    std::string i_graph, i_perms, i_set;
    interval->add_option("graph", i_graph)->required();
    interval->add_option("perms", i_perms)->required();
    interval->add_option("set", i_set)->required();

    auto* cover = app.add_subcommand("cover", "derived cover window of a voltage map");
    std::string c_graph, c_voltage, c_out, c_delta_set;
    bool c_negate = false;
    int c_delta_m = 0;
    cover->add_option("graph", c_graph)->required();
    cover->add_option("voltage", c_voltage)->required();
    cover->add_flag("--negate", c_negate, "emit the negated voltage instead");
    cover->add_option("--delta-set", c_delta_set, "emit voltage + delta_S^m instead");
    cover->add_option("--delta-m", c_delta_m);
    cover->add_option("-o,--out", c_out, "output for transformed voltages");

    auto* bounds_cmd = app.add_subcommand("bounds", "classical boundary bounds report");
    std::string bo_graph, bo_perms;
    bounds_cmd->add_option("graph", bo_graph)->required();
    bounds_cmd->add_option("perms", bo_perms)->required();

    auto* sums = app.add_subcommand("sumset", "product set in a cyclic group");
    int su_order = 7;
    std::string su_a, su_b, su_side = "left";
    sums->add_option("--order", su_order, "cyclic group order")->required();
    sums->add_option("a", su_a)->required();
    sums->add_option("b", su_b)->required();
    sums->add_option("--side", su_side, "left or right");

    auto* conj = app.add_subcommand("conjecture", "minimum of |bA| depth(A) / |A| over connected sets");
    std::string cj_graph;
    conj->add_option("graph", cj_graph)->required();

    auto* td = app.add_subcommand("td", "verify a tree decomposition");
    std::string td_graph, td_file;
    td->add_option("graph", td_graph)->required();
    td->add_option("decomposition", td_file)->required();

    auto* balsep = app.add_subcommand("balsep", "balanced separator from a tree decomposition");
    std::string bs_graph, bs_td, bs_w;
    int bs_k = 2;
    balsep->add_option("graph", bs_graph)->required();
    balsep->add_option("decomposition", bs_td)->required();
    balsep->add_option("weights", bs_w)->required();
    balsep->add_option("--k", bs_k)->required();

    auto* vmain = app.add_subcommand("verify-main", "structure dichotomy for one set or a scan");
    std::string vm_graph, vm_perms, vm_set;
    bool vm_scan = false;
    vmain->add_option("graph", vm_graph)->required();
    vmain->add_option("perms", vm_perms)->required();
    vmain->add_option("set", vm_set, "candidate set (omit with --scan)");
    vmain->add_flag("--scan", vm_scan, "sweep interval and seed candidates");

    auto* vcor110 = app.add_subcommand("verify-cor110", "Eulerian digraph dichotomy");
    std::string ve_graph, ve_perms, ve_set;
    vcor110->add_option("graph", ve_graph)->required();
    vcor110->add_option("perms", ve_perms)->required();
    vcor110->add_option("set", ve_set)->required();

    auto* vcor17 = app.add_subcommand("verify-cor17", "growth vs ring-likeness");
    std::string v17_graph, v17_frontier, v17_periodic;
    int v17_center = 0, v17_nmax = 10;
    vcor17->add_option("--graph", v17_graph, "finite stand-in graph");
    vcor17->add_option("--frontier", v17_frontier, "frontier vertex set of the stand-in");
    vcor17->add_option("--center", v17_center);
    vcor17->add_option("--periodic", v17_periodic, "periodic presentation file");
    vcor17->add_option("--nmax", v17_nmax);

    auto* vcor19 = app.add_subcommand("verify-cor19", "ring / treewidth / small trichotomy");
    std::string v19_graph, v19_perms, v19_td;
    int v19_k = 2;
    vcor19->add_option("graph", v19_graph)->required();
    vcor19->add_option("perms", v19_perms)->required();
    vcor19->add_option("--k", v19_k)->required();
    vcor19->add_option("--td", v19_td, "optional decomposition hint");

    auto* vthm3 = app.add_subcommand("verify-thm3", "small product set structure");
    std::string v3_b, v3_a, v3_periodic;
    int v3_order = 0, v3_layers = 0;
    vthm3->add_option("--order", v3_order, "cyclic group order (table mode)");
    vthm3->add_option("--b-set", v3_b, "generating set file (table mode)");
    vthm3->add_option("--a-set", v3_a, "subject set file (table mode)");
    vthm3->add_option("--periodic", v3_periodic, "presentation file (interval mode)");
    vthm3->add_option("--layers", v3_layers, "interval layer count (interval mode)");

    // Let global flags appear after the subcommand name.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    Report rep(opt.tsv);
    try {
        if (*gen) {
            if (gen_kind == "periodic") {
                PeriodicPresentation p = named_presentation(gen_periodic_name);
                write_file_or_stdout(gen_out, [&](std::ostream& os) { write_periodic(os, p); });
                return kExitPass;
            }
            GeneratedGraph g;
            if (gen_kind == "circulant") {
                if (gen_params.size() != 1) throw std::invalid_argument("circulant needs one parameter n");
                g = make_circulant(gen_params[0], parse_int_list(gen_conn), gen_directed);
            } else if (gen_kind == "cayley") {
                if (gen_params.size() != 1) throw std::invalid_argument("cayley needs one parameter (order)");
                GroupTable tbl = gen_group == "sym" ? GroupTable::symmetric(gen_params[0])
                                                    : GroupTable::cyclic(gen_params[0]);
                g = make_cayley(tbl, parse_int_list(gen_conn), gen_directed);
            } else {
                g = make_family(gen_kind, gen_params);
            }
            write_file_or_stdout(gen_out, [&](std::ostream& os) { write_graph(os, g.graph); });
            if (!gen_perms.empty())
                write_file_or_stdout(gen_perms,
                                     [&](std::ostream& os) { write_permutations(os, g.transitivity_gens); });
            if (!gen_frontier.empty())
                write_file_or_stdout(gen_frontier,
                                     [&](std::ostream& os) { write_vertex_set(os, g.frontier); });
            return kExitPass;
        }

        if (*boundary) {
            Graph g = load_graph(b_graph);
            VertexSet a = load_vertex_set(b_set, g.vertex_count());
            BoundaryProfile p = boundary_profile(g, a);
            rep.add("boundary", ids_to_string(p.vertex_boundary));
            rep.add("boundary_size", p.vertex_boundary.size());
            rep.add("edge_cut", p.edge_cut_size);
            if (g.is_directed()) {
                rep.add("out_boundary", ids_to_string(p.out_boundary));
                rep.add("in_boundary", ids_to_string(p.in_boundary));
                rep.add("delta_out", delta_out_size(g, a));
                rep.add("delta_in", delta_in_size(g, a));
            }
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*depth_cmd) {
            Graph g = load_graph(d_graph);
            VertexSet a = load_vertex_set(d_set, g.vertex_count());
            rep.add("depth", depth(g, a));
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*growth) {
            Graph g = load_graph(g_graph);
            auto b = ball_growth(g, g_from, g_kmax);
            std::ostringstream os;
            for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
            rep.add("growth", os.str());
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*aut) {
            Graph g = load_graph(a_graph);
            AutomorphismGroup ag = find_automorphisms(g, a_limit);
            rep.add("order", ag.order);
            rep.add("generators", ag.generators.size());
            rep.flush(std::cout);
            write_permutations(std::cout, ag.generators);
            return kExitPass;
        }

        if (*blocks) {
            Graph g = load_graph(bl_graph);
            auto gens = load_permutations(bl_perms, g.vertex_count());
            if (!bl_seed_pair.empty()) {
                auto pair = parse_int_list(bl_seed_pair);
                if (pair.size() != 2) throw std::invalid_argument("--seed-pair wants u,v");
                BlockSystem sys = minimal_block_system(g.vertex_count(), gens, {pair[0], pair[1]});
                rep.add("blocks", sys.block_count());
                rep.add("block_size", sys.blocks[0].size());
                rep.flush(std::cout);
                for (const auto& blk : sys.blocks) std::cout << ids_to_string(blk) << "\n";
            } else {
                auto systems = enumerate_block_systems(g.vertex_count(), gens);
                rep.add("systems", systems.size());
                rep.flush(std::cout);
                for (const auto& sys : systems)
                    std::cout << sys.block_count() << " blocks of size " << sys.blocks[0].size()
                              << (sys.is_trivial() ? " (trivial)" : "") << "\n";
            }
            return kExitPass;
        }

        if (*quot) {
            Graph g = load_graph(q_graph);
            auto gens = load_permutations(q_perms, g.vertex_count());
            auto pair = parse_int_list(q_seed_pair);
            if (pair.size() != 2) throw std::invalid_argument("--seed-pair wants u,v");
            BlockSystem sys = minimal_block_system(g.vertex_count(), gens, {pair[0], pair[1]});
            Graph q = quotient_graph(g, sys);
            write_file_or_stdout(q_out, [&](std::ostream& os) { write_graph(os, q); });
            return kExitPass;
        }

        if (*uncross) {
            Graph g = load_graph(u_graph);
            VertexSet a1 = load_vertex_set(u_a1, g.vertex_count());
            VertexSet a2 = load_vertex_set(u_a2, g.vertex_count());
            UncrossingReport r = uncrossing_report(g, a1, a2);
            rep.add("lhs1", r.lhs1);
            rep.add("rhs1", r.rhs1);
            rep.add("lhs2", r.lhs2);
            rep.add("rhs2", r.rhs2);
            rep.add("third_applicable", r.third_applicable ? 1 : 0);
            rep.add("q_union_u", r.q_union_u);
            rep.add("all_hold", r.all_hold() ? 1 : 0);
            rep.flush(std::cout);
            return r.all_hold() ? kExitPass : kExitFail;
        }

        if (*tube) {
            Graph g = load_graph(t_graph);
            VertexSet a = load_vertex_set(t_set, g.vertex_count());
            if (t_left.empty() != t_right.empty())
                throw std::invalid_argument("supply both --left and --right, or neither");
            if (t_left.empty()) {
                auto found = find_boundary_partition(g, a, t_s, t_t);
                if (!found) {
                    rep.add("partition", "none");
                    rep.flush(std::cout);
                    return kExitFail;
                }
                rep.add("left", ids_to_string(found->first));
                rep.add("right", ids_to_string(found->second));
                rep.flush(std::cout);
                return kExitPass;
            }
            VertexSet l = load_vertex_set(t_left, g.vertex_count());
            VertexSet r = load_vertex_set(t_right, g.vertex_count());
            try {
                verify_tube(g, a, l, r, t_s, t_t);
            } catch (const std::invalid_argument& e) {
                rep.add("valid", 0);
                rep.add("reason", e.what());
                rep.flush(std::cout);
                return kExitFail;
            }
            rep.add("valid", 1);
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*merge) {
            Graph g = load_graph(m_graph);
            auto set_of = [&](const std::string& p) { return load_vertex_set(p, g.vertex_count()); };
            TubeCertificate c1 = verify_tube(g, set_of(m_a1), set_of(m_l1), set_of(m_r1), m_s, m_t);
            TubeCertificate c2 = verify_tube(g, set_of(m_a2), set_of(m_l2), set_of(m_r2), m_s, m_t);
            MergeReport mr = merge_status(g, c1, c2);
            rep.add("merges", mr.merges ? 1 : 0);
            if (mr.merges) {
                TubeCertificate merged = merge_tubes(g, c1, c2);
                rep.add("merged_set", ids_to_string(merged.A));
                rep.add("merged_s", merged.s);
                rep.add("merged_t", merged.t);
            }
            rep.flush(std::cout);
            return mr.merges ? kExitPass : kExitFail;
        }

        if (*ring) {
            Graph g = load_graph(r_graph);
            auto gens = load_permutations(r_perms, g.vertex_count());
            RingSearchResult r = detect_ring(g, gens, opt.tmax);
            if (!r.cert) {
                rep.add("ring", "none");
                rep.add("exhaustive", r.exhaustive ? 1 : 0);
                rep.flush(std::cout);
                return r.exhaustive ? kExitFail : kExitBudget;
            }
            rep.add("s", r.cert->s);
            rep.add("t", r.cert->t);
            rep.add("tight", r.cert->tight ? 1 : 0);
            rep.add("cohesive_q", r.cert->cohesive_q);
            rep.add("blocks", r.cert->cyclic.block_count());
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*kappa) {
            PeriodicPresentation p = load_periodic(k_periodic);
            KappaResult k = kappa_infinity(p);
            rep.add("kappa", k.value);
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*interval) {
            Graph g = load_graph(i_graph);
            auto gens = load_permutations(i_perms, g.vertex_count());
            VertexSet a = load_vertex_set(i_set, g.vertex_count());
            RingSearchResult r = detect_ring(g, gens, opt.tmax);
            if (!r.cert) {
                rep.add("ring", "none");
                rep.flush(std::cout);
                return r.exhaustive ? kExitFail : kExitBudget;
            }
            auto cov = interval_cover(g, *r.cert, a);
            if (!cov) {
                rep.add("interval", "none (set meets every block)");
                rep.flush(std::cout);
                return kExitFail;
            }
            rep.add("blocks", cov->interval.size());
            rep.add("excess", cov->excess);
            rep.add("bound", cov->bound);
            rep.add("within_bound", cov->within_bound ? 1 : 0);
            rep.flush(std::cout);
            return cov->within_bound ? kExitPass : kExitFail;
        }

        if (*cover) {
            Graph g = load_graph(c_graph);
            VoltageMap mu = load_voltage(c_voltage, g);
            if (c_negate || !c_delta_set.empty()) {
                VoltageMap out = c_negate
                                     ? negate_voltage(mu)
                                     : add_delta(mu, load_vertex_set(c_delta_set, g.vertex_count()),
                                                 c_delta_m);
                write_file_or_stdout(c_out, [&](std::ostream& os) { write_voltage(os, out); });
                return kExitPass;
            }
            CoverWindow w = build_cover_window(mu, opt.window);
            rep.add("vertices", w.graph.vertex_count());
            rep.add("edges", w.graph.edge_count());
            rep.add("frontier", w.frontier.size());
            rep.add("components", connected_components(w.graph).size());
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*bounds_cmd) {
            Graph g = load_graph(bo_graph);
            auto gens = load_permutations(bo_perms, g.vertex_count());
            BoundReport r = bound_report(g, gens);
            if (opt.tsv) {
                // Machine profile: one header, one row per admissible size.
                ProfileOptions po;
                po.connected_only = g.vertex_count() <= 30;
                auto prof = min_boundary_profile(g, po);
                std::cout << "size\tmin_vb\tmin_ec\twitness\n";
                for (const auto& e : prof)
                    if (e.any)
                        std::cout << e.size << "\t" << e.min_vertex_boundary << "\t" << e.min_edge_cut
                                  << "\t" << ids_to_string(e.boundary_witness) << "\n";
            } else {
                rep.add("degree", r.degree);
                for (const auto& c : r.checks) {
                    rep.add(c.name, c.holds ? 1 : 0);
                    rep.add(c.name + " observed", c.observed);
                }
                rep.add("all_hold", r.all_hold ? 1 : 0);
                rep.flush(std::cout);
            }
            return r.all_hold ? kExitPass : kExitFail;
        }

        if (*sums) {
            GroupTable tbl = GroupTable::cyclic(su_order);
            VertexSet a = load_vertex_set(su_a, su_order);
            VertexSet b = load_vertex_set(su_b, su_order);
            auto prod = sumset(tbl, a.ids(), b.ids(), su_side != "right");
            std::ostringstream os;
            for (size_t i = 0; i < prod.size(); ++i) os << (i ? " " : "") << prod[i];
            rep.add("product", os.str());
            rep.add("size", prod.size());
            auto cd = check_cauchy_davenport(tbl, a.ids(), b.ids());
            rep.add("cd_applicable", cd.applicable ? 1 : 0);
            rep.add("cd_holds", cd.holds ? 1 : 0);
            rep.flush(std::cout);
            return cd.holds ? kExitPass : kExitFail;
        }

        if (*conj) {
            Graph g = load_graph(cj_graph);
            RatioResult r = depth_ratio_explorer(g, opt.budget, opt.seed);
            rep.add("seed", opt.seed);
            rep.add("min_numerator", r.num);
            rep.add("min_denominator", r.den);
            rep.add("ratio", static_cast<double>(r.num) / static_cast<double>(r.den));
            rep.add("witness", ids_to_string(r.witness));
            rep.add("exhaustive", r.exhaustive ? 1 : 0);
            rep.add("examined", r.examined);
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*td) {
            Graph g = load_graph(td_graph);
            TreeDecomposition t = load_tree_decomposition(td_file, g.vertex_count());
            try {
                rep.add("width", verify_td(g, t));
            } catch (const std::invalid_argument& e) {
                rep.add("valid", 0);
                rep.add("reason", e.what());
                rep.flush(std::cout);
                return kExitFail;
            }
            rep.add("valid", 1);
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*balsep) {
            Graph g = load_graph(bs_graph);
            TreeDecomposition t = load_tree_decomposition(bs_td, g.vertex_count());
            VertexSet w = load_vertex_set(bs_w, g.vertex_count());
            VertexSet s = balanced_separator(g, t, w, bs_k);
            rep.add("separator", ids_to_string(s));
            rep.add("size", s.size());
            rep.flush(std::cout);
            return kExitPass;
        }

        if (*vmain) {
            Graph g = load_graph(vm_graph);
            auto gens = load_permutations(vm_perms, g.vertex_count());
            if (vm_scan) {
                ScanSink sink;
                if (opt.tsv) {
                    std::cout << "candidate_id\tcase\tk\tdepth\tsize\ts\tt\texcess\n";
                    sink = [](long long id, const VertexSet&, const DichotomyOutcome& oc) {
                        std::cout << id << "\t" << to_string(oc.outcome) << "\t" << oc.k << "\t"
                                  << oc.a_depth << "\t" << oc.a_size << "\t"
                                  << (oc.ring ? oc.ring->s : -1) << "\t" << (oc.ring ? oc.ring->t : -1)
                                  << "\t" << (oc.cover ? oc.cover->excess : -1) << "\n";
                    };
                }
                // Row streaming stays single-threaded so the row order is
                // canonical regardless of --jobs.
                ScanSummary sum = scan_main(g, gens, opt.kmax, opt.budget, opt.tsv ? 1 : opt.jobs,
                                            opt.tsv ? &sink : nullptr);
                if (!opt.tsv) {
                    rep.add("seed", opt.seed);
                    rep.add("candidates", sum.candidates);
                    rep.add("skipped_large_boundary", sum.skipped_large_boundary);
                    for (const auto& [c, count] : sum.tally) rep.add(to_string(c), count);
                    rep.add("budget_exhausted", sum.budget_exhausted ? 1 : 0);
                    rep.flush(std::cout);
                }
                if (sum.violation) {
                    std::cout << "violation witness: " << ids_to_string(*sum.violation_witness) << "\n";
                    return kExitFail;
                }
                return sum.budget_exhausted ? kExitBudget : kExitPass;
            }
            if (vm_set.empty()) throw std::invalid_argument("supply a set file or --scan");
            VertexSet a = load_vertex_set(vm_set, g.vertex_count());
            DichotomyOutcome out = main_dichotomy(g, gens, a);
            rep.add("case", to_string(out.outcome));
            rep.add("k", out.k);
            rep.add("depth", out.a_depth);
            rep.add("size", out.a_size);
            if (out.failed_precondition.size()) rep.add("failed_precondition", out.failed_precondition);
            if (out.ring) {
                rep.add("s", out.ring->s);
                rep.add("t", out.ring->t);
            }
            if (out.cover) rep.add("excess", out.cover->excess);
            rep.flush(std::cout);
            if (out.outcome == DichotomyCase::shallow || out.outcome == DichotomyCase::ring_interval)
                return kExitPass;
            return out.outcome == DichotomyCase::inconclusive ? kExitBudget : kExitFail;
        }

        if (*vcor110) {
            Graph g = load_graph(ve_graph);
            auto gens = load_permutations(ve_perms, g.vertex_count());
            VertexSet a = load_vertex_set(ve_set, g.vertex_count());
            EulerianOutcome out = eulerian_cor110(g, gens, a);
            rep.add("case", to_string(out.outcome));
            rep.add("k", out.k);
            rep.add("underlying_boundary", out.underlying_boundary);
            rep.add("derived_chain_ok", out.derived_chain_ok ? 1 : 0);
            rep.add("diameter_ok", out.diameter_ok ? 1 : 0);
            rep.add("case_i", out.case_i ? 1 : 0);
            rep.add("case_ii", out.case_ii ? 1 : 0);
            rep.flush(std::cout);
            if (out.case_i || out.case_ii) return kExitPass;
            return out.outcome == DichotomyCase::inconclusive ? kExitBudget : kExitFail;
        }

        if (*vcor17) {
            GrowthReport out;
            if (!v17_periodic.empty()) {
                out = growth_cor17_periodic(load_periodic(v17_periodic), v17_nmax);
            } else {
                Graph g = load_graph(v17_graph);
                VertexSet frontier = v17_frontier.empty()
                                         ? VertexSet::empty_set(g.vertex_count())
                                         : load_vertex_set(v17_frontier, g.vertex_count());
                out = growth_cor17_graph(g, frontier, v17_center, v17_nmax);
            }
            std::ostringstream os;
            for (size_t i = 0; i < out.growth.size(); ++i) os << (i ? " " : "") << out.growth[i];
            rep.add("growth", os.str());
            rep.add("all_strict", out.all_strict ? 1 : 0);
            rep.add("ring_exempt", out.ring_exempt ? 1 : 0);
            if (out.clause_checked) {
                rep.add("clause_applicable", out.clause_applicable ? 1 : 0);
                rep.add("clause_holds", out.clause_holds ? 1 : 0);
            }
            rep.flush(std::cout);
            bool ok = out.all_strict || out.ring_exempt;
            if (out.clause_checked && out.clause_applicable) ok = ok && out.clause_holds;
            return ok ? kExitPass : kExitFail;
        }

        if (*vcor19) {
            Graph g = load_graph(v19_graph);
            auto gens = load_permutations(v19_perms, g.vertex_count());
            TreeDecomposition hint;
            bool have_hint = !v19_td.empty();
            if (have_hint) hint = load_tree_decomposition(v19_td, g.vertex_count());
            Cor19Report out = cor19_check(g, gens, v19_k, have_hint ? &hint : nullptr, opt.budget);
            rep.add("outcome", to_string(out.outcome));
            rep.add("max_degree", out.max_degree);
            rep.add("diameter", out.diameter);
            if (out.ring) {
                rep.add("s", out.ring->s);
                rep.add("t", out.ring->t);
            }
            if (out.found_width) rep.add("width", *out.found_width);
            rep.flush(std::cout);
            if (out.outcome == Cor19Outcome::violation) return kExitFail;
            if (out.outcome == Cor19Outcome::inconclusive) return kExitBudget;
            return kExitPass;
        }

        if (*vthm3) {
            Thm3Report out;
            if (!v3_periodic.empty()) {
                out = thm3_check_periodic(load_periodic(v3_periodic), v3_layers);
            } else {
                if (v3_order < 1) throw std::invalid_argument("table mode needs --order");
                GroupTable tbl = GroupTable::cyclic(v3_order);
                VertexSet b = load_vertex_set(v3_b, v3_order);
                VertexSet a = load_vertex_set(v3_a, v3_order);
                out = thm3_check_table(tbl, b.ids(), a.ids());
            }
            rep.add("a_size", out.a_size);
            rep.add("ba_size", out.ba_size);
            rep.add("margin", out.m);
            rep.add("hypothesis_holds", out.hypothesis_holds ? 1 : 0);
            rep.add("finite_group_caveat", out.finite_group ? 1 : 0);
            if (out.hypothesis_holds) {
                rep.add("structure_found", out.structure_found ? 1 : 0);
                rep.add("n_size", out.n_size);
                rep.add("n_small", out.n_small ? 1 : 0);
                rep.add("quotient", out.quotient_kind);
            }
            rep.flush(std::cout);
            if (!out.hypothesis_holds) return kExitPass;  // nothing to certify; margin reported
            return out.structure_found ? kExitPass : kExitBudget;
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
