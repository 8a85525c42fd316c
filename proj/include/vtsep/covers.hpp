#pragma once

#include <unordered_map>

#include "vtsep/generators.hpp"
#include "vtsep/graph.hpp"
#include "vtsep/symmetry.hpp"
#include "vtsep/tubes.hpp"

namespace vtsep {

/// Antisymmetric integer arc labels over an undirected base graph:
/// mu(u,v) = -mu(v,u) on every arc.
class VoltageMap {
public:
    explicit VoltageMap(Graph base);

    static VoltageMap zero(Graph base);

    const Graph& base() const { return base_; }
    int operator()(int u, int v) const;
    /// Sets mu(u,v) = value (and mu(v,u) = -value); the edge must exist.
    void set(int u, int v, int value);
    int max_abs() const;

    /// Sum of voltages along a closed walk given by its vertex sequence.
    long long cycle_sum(const std::vector<int>& closed_walk) const;

private:
    long long key(int u, int v) const { return static_cast<long long>(u) * base_.vertex_count() + v; }
    Graph base_;
    std::unordered_map<long long, int> value_;
};

/// Finite slab of the derived cover: vertices (v, i) for |i| <= L, with
/// (u,i) ~ (v,j) iff uv is a base edge and j - i = mu(u,v).  cell_of is the
/// covering projection.
using CoverWindow = WindowGraph;

CoverWindow build_cover_window(const VoltageMap& mu, int half_width);

VoltageMap negate_voltage(const VoltageMap& mu);
/// mu + delta_S^m: arcs leaving S gain m, arcs entering S lose m.
VoltageMap add_delta(const VoltageMap& mu, const VertexSet& s, int m);

/// Tube-derived voltage: 1 on arcs from phi(L) into phi(A), antisymmetrized,
/// 0 elsewhere.  phi must be an automorphism.
VoltageMap mu_from_tube(const Graph& g, const TubeCertificate& cert, const Permutation& phi);

struct LayerDecompositionReport {
    bool precondition_ok = false;    // g minus the L-A edges stays connected
    bool window_connected = false;   // cover window connected before deletion
    bool layers_are_components = false;
    int interior_layers = 0;
};

/// Builds the cover of the tube voltage (phi = identity), deletes the lifted
/// L-A edges, and checks that the interior components are exactly the layers.
LayerDecompositionReport layer_decomposition_check(const Graph& g, const TubeCertificate& cert,
                                                   int half_width);

}  // namespace vtsep
