#pragma once

#include <optional>
#include <string>

#include "vtsep/generators.hpp"
#include "vtsep/graph.hpp"
#include "vtsep/symmetry.hpp"

namespace vtsep {

struct ProfileEntry {
    int size = 0;
    bool any = false;                    // an admissible set of this size exists
    int min_vertex_boundary = 0;         // |∂A| (or |∂⁺A| for digraphs)
    long long min_edge_cut = 0;          // |δA| (or |δ⁺A| for digraphs)
    VertexSet boundary_witness;
    VertexSet edge_witness;
};

struct ProfileOptions {
    bool connected_only = true;
    bool exclude_closure_full = false;  // skip A with A ∪ ∂A = V
    int max_size = -1;                  // default: |V| - 1
};

/// Exact minima of |∂A| and |δA| over admissible sets of each size, by
/// exhaustive enumeration (connected sets up to 30 vertices, arbitrary sets
/// up to 20).  Digraphs are profiled with out-boundaries.
std::vector<ProfileEntry> min_boundary_profile(const Graph& g, const ProfileOptions& opt);

struct TheoremCheck {
    std::string name;
    bool holds = false;
    long long observed = 0;     // the extremal quantity found
    long long bound_times3 = 0; // bounds kept as scaled integers to stay exact
    VertexSet witness;
    std::string detail;
};

struct BoundReport {
    int degree = 0;
    std::vector<TheoremCheck> checks;
    bool all_hold = true;
};

/// Verifies the classical vertex-transitive boundary bounds against the
/// exhaustive profile: edge connectivity >= d, vertex boundary >= 2(d+1)/3,
/// digraph out-boundary >= (d+1)/2, and the per-set diameter bound
/// |∂A|/|A| >= 1/(diam(A)+1).
BoundReport bound_report(const Graph& g, const std::vector<Permutation>& gens);

/// Product set AB (side=left) or BA (side=right).
std::vector<int> sumset(const GroupTable& tbl, const std::vector<int>& a, const std::vector<int>& b,
                        bool left = true);

struct CauchyDavenportCheck {
    bool applicable = false;  // group of prime order
    bool holds = false;
    int sum_size = 0;
    int lower = 0;
};

CauchyDavenportCheck check_cauchy_davenport(const GroupTable& tbl, const std::vector<int>& a,
                                            const std::vector<int>& b);

struct RatioResult {
    long long num = 0;   // |∂A| * depth(A)
    long long den = 1;   // |A|
    VertexSet witness;
    bool exhaustive = false;
    long long examined = 0;
};

/// Minimum of |∂A| * depth(A) / |A| over connected A with |A| <= |V|/2:
/// an empirical upper bound on the best constant for this graph.  Exhaustive
/// for small graphs, seeded random growth otherwise.
RatioResult depth_ratio_explorer(const Graph& g, long long budget, unsigned long long seed = 0x9e3779b9ULL);

}  // namespace vtsep
