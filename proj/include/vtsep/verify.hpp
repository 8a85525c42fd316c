#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "vtsep/bounds.hpp"
#include "vtsep/generators.hpp"
#include "vtsep/graph.hpp"
#include "vtsep/ringstruct.hpp"
#include "vtsep/symmetry.hpp"
#include "vtsep/treewidth.hpp"

namespace vtsep {

enum class DichotomyCase { shallow, ring_interval, precondition_failed, inconclusive, violation };

std::string to_string(DichotomyCase c);

/// Outcome of the structure dichotomy on one candidate set.  `violation` is
/// only ever produced when the ring search was provably exhaustive and the
/// shallow bounds failed; incomplete searches yield `inconclusive`.
struct DichotomyOutcome {
    DichotomyCase outcome = DichotomyCase::inconclusive;
    std::string failed_precondition;
    int k = 0;
    long long a_size = 0;
    int a_depth = -1;
    long long diameter = -1;
    // shallow evidence: depth <= k, |A| <= 2k^3 + k^2, regular with 2d <= 3k-2
    bool shallow_holds = false;
    bool depth_ok = false, size_ok = false, degree_ok = false;
    int degree = -1;
    // ring evidence: certificate with 2st <= k and interval excess within
    // k^2(k+2)/2
    bool ring_holds = false;
    std::optional<RingCertificate> ring;
    std::optional<IntervalCover> cover;
    bool ring_search_exhaustive = false;
    bool both_hold = false;
};

struct MainOptions {
    long long known_diameter = -1;            // skip the diameter recomputation
    const RingSearchResult* known_ring = nullptr;  // reuse a prior ring search
};

DichotomyOutcome main_dichotomy(const Graph& g, const std::vector<Permutation>& gens, const VertexSet& a,
                                const MainOptions& opt = {});

struct ScanSummary {
    long long candidates = 0;
    long long skipped_large_boundary = 0;
    std::map<DichotomyCase, long long> tally;
    long long both_cases = 0;
    std::optional<DichotomyOutcome> violation;
    std::optional<VertexSet> violation_witness;
    bool budget_exhausted = false;
};

using ScanSink = std::function<void(long long candidate_id, const VertexSet& a, const DichotomyOutcome&)>;

/// Sweeps block-interval candidates (and their single-vertex perturbations)
/// plus small connected seeds through the dichotomy; any violation halts the
/// scan with a witness.  An optional sink receives every evaluated candidate
/// (serialized across workers).
ScanSummary scan_main(const Graph& g, const std::vector<Permutation>& gens, int k_max, long long budget,
                      int jobs = 1, const ScanSink* sink = nullptr);

struct GrowthReport {
    std::vector<int> growth;
    bool all_strict = true;  // 2 b(n) > n(n+1) for every checked n
    int first_failure = -1;
    bool ring_exempt = false;
    std::optional<PeriodicRingCertificate> ring;
    // depth-vs-boundary clause on a sample interval (periodic inputs)
    bool clause_checked = false;
    bool clause_applicable = false;  // depth(A) > |∂A|
    int clause_boundary = 0;
    int clause_depth = 0;
    bool clause_holds = true;  // certificate with 2st <= |∂A| exists
};

/// Growth-vs-ring dichotomy on a finite graph standing in for an infinite
/// one: b(n) must strictly exceed n(n+1)/2 unless the graph is ring-like.
/// The ball of radius n_max around `center` must avoid `frontier`.
GrowthReport growth_cor17_graph(const Graph& g, const VertexSet& frontier, int center, int n_max);

GrowthReport growth_cor17_periodic(const PeriodicPresentation& p, int n_max);

struct EulerianOutcome {
    int k = 0;                      // |∂⁺A|
    int underlying_boundary = 0;    // |∂A| in the unoriented graph
    bool derived_chain_ok = false;  // |∂A| <= 2k^2
    bool size_ok = false;
    bool closure_connected = false;
    bool diameter_ok = false;  // diam >= 31(2k^2+1)^2
    long long diameter = -1;
    bool case_i = false;   // |A| <= 16k^6 + 4k^4
    bool case_ii = false;  // ring with st <= k^2, excess <= 4k^6 + 4k^4
    std::optional<RingCertificate> ring;
    std::optional<IntervalCover> cover;
    DichotomyCase outcome = DichotomyCase::inconclusive;
};

/// Eulerian-digraph form of the dichotomy.  Rejects non-Eulerian digraphs:
/// without balance, a directed path in an out-degree-1 orientation has
/// out-boundary 1 at unbounded size, so no such bound can hold.
EulerianOutcome eulerian_cor110(const Graph& dg, const std::vector<Permutation>& gens, const VertexSet& a);

enum class Cor19Outcome { ring_like, treewidth_at_least_k, small_degree_diameter, violation, inconclusive };

std::string to_string(Cor19Outcome c);

struct Cor19Report {
    Cor19Outcome outcome = Cor19Outcome::inconclusive;
    std::optional<RingCertificate> ring;  // 2st <= k
    bool ring_exhaustive = false;
    std::optional<int> found_width;  // a decomposition of width < k exists
    bool width_search_complete = false;
    int max_degree = 0;
    long long diameter = 0;
};

/// Ring-like / large-treewidth / small-graph trichotomy at parameter k.
Cor19Report cor19_check(const Graph& g, const std::vector<Permutation>& gens, int k,
                        const TreeDecomposition* td_hint = nullptr, long long budget = 2'000'000);

struct Thm3Report {
    long long a_size = 0;
    long long ba_size = 0;
    long long m = 0;  // |BA| - |A|
    bool hypothesis_holds = false;  // 8 m^3 < |A|
    bool finite_group = false;      // small-product structure is only asserted for infinite groups
    bool structure_found = false;
    long long n_size = 0;  // |N| (or the block size bounding it)
    bool n_small = false;  // 64 |N|^3 < |A|
    std::string quotient_kind;
};

/// Product-set structure check on an explicit finite group table.
Thm3Report thm3_check_table(const GroupTable& tbl, const std::vector<int>& b_set,
                            const std::vector<int>& a_set);

/// Periodic-presentation form: B is the presentation's step set plus the
/// identity, A an interval of `a_layers` layers.
Thm3Report thm3_check_periodic(const PeriodicPresentation& p, int a_layers);

/// Window form for graphs standing in for infinite Cayley graphs: computes
/// |BA| = |A| + |∂A| with a frontier guard and reports the margin.
Thm3Report thm3_check_window(const Graph& g, const VertexSet& frontier, const VertexSet& a);

}  // namespace vtsep
