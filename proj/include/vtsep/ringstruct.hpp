#pragma once

#include <optional>

#include "vtsep/generators.hpp"
#include "vtsep/graph.hpp"
#include "vtsep/symmetry.hpp"

namespace vtsep {

/// Block system equipped with a circular order of its blocks, preserved
/// (as rotation or reflection) by every attached generator.
struct CyclicSystem {
    BlockSystem system;
    std::vector<int> order;  // block index at each circular position
    std::vector<Permutation> gens;

    int block_count() const { return static_cast<int>(order.size()); }
    /// Circular distance between two blocks.
    int order_distance(int block_a, int block_b) const;
    std::vector<int> position_of_block;  // inverse of order
};

/// Checks order shape and that each generator induces a rotation/reflection
/// of the circular order.
CyclicSystem verify_cyclic_system(const Graph& g, const BlockSystem& sys, const std::vector<int>& order,
                                  const std::vector<Permutation>& gens);

struct RingCertificate {
    CyclicSystem cyclic;
    int s = 0;          // common block size
    int t = 0;          // max order-distance spanned by an edge
    bool tight = false; // blocks at distance exactly t pairwise neighborly
    int cohesive_q = 0;
};

RingCertificate verify_ring_like(const Graph& g, const CyclicSystem& cyclic);

/// Minimum q such that vertices in the same or adjacent blocks are joined by
/// a path of length <= q.
int cohesiveness_index(const Graph& g, const CyclicSystem& cyclic);

struct RingSearchResult {
    std::optional<RingCertificate> cert;
    /// True when the search provably covered every cyclic system with span
    /// <= max_t (full automorphism group known, block-system lattice closed,
    /// exact order search everywhere).  Soundness gate for violation reports.
    bool exhaustive = false;
};

/// Searches block systems of the generator group for a preserved circular
/// order of span <= max_t; returns the certificate minimizing s*t.  Sound but
/// incomplete in general.  For graphs small enough for automorphism search,
/// the supplied evidence is augmented with the full group.
RingSearchResult detect_ring(const Graph& g, const std::vector<Permutation>& gens, int max_t);

/// Ring structure of a periodic presentation whose blocks refine the layers:
/// cell vertices get phases 0..phases-1 (equal class sizes) and the block of
/// (v, layer i) has linear index i*phases + phase_of_cell[v].
struct PeriodicRingCertificate {
    int phases = 1;
    std::vector<int> phase_of_cell;
    int s = 0;
    int t = 0;
    bool tight = false;
    int cohesive_q = 0;
};

std::optional<PeriodicRingCertificate> detect_ring_periodic(const PeriodicPresentation& p, int max_t);

struct KappaResult {
    int value = 0;
    WindowGraph window;
    VertexSet cut;  // witness vertices (window ids), confined to middle layers
};

/// Minimum vertex cut separating the two ends, computed as a vertex-capacitated
/// max-flow between far layer groups on growing windows until the value
/// stabilizes for two consecutive window sizes.
KappaResult kappa_infinity(const PeriodicPresentation& p, int max_rounds = 8);

struct IntervalCover {
    std::vector<int> interval;  // block ids, consecutive in the cyclic order
    VertexSet q;                // union of the interval's blocks
    long long excess = 0;       // |Q \ A|
    long long bound = 0;        // 2 s^2 t^2 k + 2 s t k with k = |∂A|
    bool within_bound = false;
};

/// Smallest interval of the cyclic order whose block union contains A;
/// nullopt when A meets every block (no proper interval exists).
std::optional<IntervalCover> interval_cover(const Graph& g, const RingCertificate& cert, const VertexSet& a);

}  // namespace vtsep
