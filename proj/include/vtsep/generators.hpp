#pragma once

#include <string>
#include <vector>

#include "vtsep/graph.hpp"
#include "vtsep/symmetry.hpp"

namespace vtsep {

/// Finite group as an explicit multiplication table.  Laws are verified at
/// construction (associativity exhaustively up to order 64, sampled above).
class GroupTable {
public:
    GroupTable(int order, std::vector<int> table);

    static GroupTable cyclic(int n);
    /// Symmetric group on k symbols, k <= 5.
    static GroupTable symmetric(int k);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_.at(static_cast<size_t>(a) * order_ + b); }
    int inv(int a) const { return inverse_.at(a); }
    const std::vector<int>& table() const { return table_; }

private:
    int order_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

/// A constructed graph together with the evidence its constructor can attach:
/// automorphism generators certifying vertex-transitivity, and frontier marks
/// for truncated families.
struct GeneratedGraph {
    Graph graph;
    std::vector<Permutation> transitivity_gens;
    VertexSet frontier;
    std::string family;
};

GeneratedGraph make_circulant(int n, const std::vector<int>& connection, bool directed);

GeneratedGraph make_cayley(const GroupTable& tbl, const std::vector<int>& connection, bool directed);

/// name in {prism, torus, petersen, figure2, tree_ball}.
GeneratedGraph make_family(const std::string& name, const std::vector<int>& params);

/// Jump edge of a periodic presentation: (u, layer i) ~ (v, layer i+k).
struct Jump {
    int u = 0;
    int v = 0;
    int k = 0;
};

/// Finite cell graph plus integer-shift jump edges, presenting a two-ended
/// infinite graph as a repeating strip.
struct PeriodicPresentation {
    Graph cell;  // undirected
    std::vector<Jump> jumps;

    int max_jump() const;
};

PeriodicPresentation make_periodic(int cell_vertices, const std::vector<std::pair<int, int>>& cell_edges,
                                   const std::vector<Jump>& jumps);

// Named presentations used throughout the test corpus.
PeriodicPresentation ladder_presentation();        // strip of squares with rungs
PeriodicPresentation path_presentation();          // two-way-infinite path
PeriodicPresentation squared_path_presentation();  // path with distance-2 chords
PeriodicPresentation prism_cell4_presentation();   // same strip as the ladder, built from a two-rung cell
PeriodicPresentation figure2_presentation();       // triangle strip whose only end-fixing symmetries are translations

/// Finite slab of a periodic presentation.  Vertex (cell v, layer i) for
/// |i| <= L; frontier marks every vertex close enough to the extreme layers
/// that some neighbor was truncated.
struct WindowGraph {
    Graph graph;
    std::vector<int> layer_of;
    std::vector<int> cell_of;
    VertexSet frontier;
    int half_width = 0;  // L
    int cell_size = 0;

    int vertex_id(int cell_v, int layer) const { return (layer + half_width) * cell_size + cell_v; }
    bool interior(int v) const { return !frontier.contains(v); }
};

WindowGraph window(const PeriodicPresentation& p, int half_width);

/// Automorphism evidence for a periodic presentation: a permutation of cell
/// vertices combined with a layer rule i -> ±i + shift + offset[v].  The
/// per-vertex offsets express fractional translations (half-shifts of a cell
/// that spans several natural periods); empty means all zero.
struct LayeredAutomorphism {
    Permutation cell_map;
    int shift = 0;
    bool reflects = false;
    std::vector<int> layer_offset;

    int offset_of(int cell_v) const {
        return layer_offset.empty() ? 0 : layer_offset.at(cell_v);
    }
    std::pair<int, int> apply(int cell_v, int layer) const {
        int base = reflects ? shift - layer : shift + layer;
        return {cell_map.apply(cell_v), base + offset_of(cell_v)};
    }
};

/// Checks that the layered map preserves the presentation's edge set.
bool is_periodic_automorphism(const PeriodicPresentation& p, const LayeredAutomorphism& a);

/// End-behavior evidence: orbit classes of the cell under end-fixing
/// (non-reflecting) evidence maps.  Class count 1 = Type 1 behavior,
/// 2 = Type 2 behavior, relative to the supplied evidence.
struct EndClassification {
    int type = 0;  // number of shift-orbit classes (1 or 2)
    std::vector<int> class_of_cell;
    int shift_count = 0;
    int reflection_count = 0;
};

EndClassification classify_ends(const PeriodicPresentation& p, const std::vector<LayeredAutomorphism>& evidence);

/// Standard evidence for the named presentations above (translation plus the
/// extra symmetries that exist by construction).
std::vector<LayeredAutomorphism> standard_evidence(const PeriodicPresentation& p, const std::string& name);

}  // namespace vtsep
