#pragma once

#include <optional>

#include "vtsep/graph.hpp"
#include "vtsep/uncrossing.hpp"

namespace vtsep {

/// A set A whose boundary splits into two sides L, R of metric diameter <= s
/// at mutual distance >= t, with G[A ∪ ∂A] connected.
struct TubeCertificate {
    VertexSet A;
    VertexSet L;
    VertexSet R;
    int s = 0;
    int t = 0;
};

/// Validates every tube invariant; distances are measured in the whole graph.
/// Throws with the witness pair when a distance condition fails.
TubeCertificate verify_tube(const Graph& g, const VertexSet& a, const VertexSet& l, const VertexSet& r,
                            int s, int t);

/// Single-linkage clustering of ∂A at threshold s, validated against the
/// (s,t) conditions.  Sound but not complete.
std::optional<std::pair<VertexSet, VertexSet>> find_boundary_partition(const Graph& g, const VertexSet& a,
                                                                       int s, int t);

struct MergeReport {
    RegionDecomposition reg;
    bool p_nonempty = false, s_nonempty = false, x_nonempty = false, z_nonempty = false;
    bool sides1_match = false;  // {Q, Y} = {L1, R1}
    bool sides2_match = false;  // {T, W} = {L2, R2}
    bool u_empty = false;
    bool merges = false;
};

MergeReport merge_status(const Graph& g, const TubeCertificate& c1, const TubeCertificate& c2);

/// Union tube P∪Q∪S∪T∪X with boundary partition {Y, W} and tight recomputed
/// parameters.  Requires merge_status to report a merge.
TubeCertificate merge_tubes(const Graph& g, const TubeCertificate& c1, const TubeCertificate& c2);

struct BalloonReport {
    std::vector<VertexSet> component_sets;
    std::vector<int> component_depths;
    std::vector<char> touches_frontier;  // depth is only a lower bound there
    int deep_count = 0;                  // finite components of depth >= k+2
    bool at_most_one_deep = false;
};

/// Components of g \ X with their depths, for a cut X within distance k of y.
/// The prediction checked: at most one finite component reaches depth k+2.
/// On window slabs, pass the frontier so truncated components count as
/// infinite rather than finite.
BalloonReport balloon_check(const Graph& g, const VertexSet& x, int y, int k,
                            const VertexSet* frontier = nullptr);

}  // namespace vtsep
