#include "vtsep/covers.hpp"

#include <algorithm>
#include <string>

namespace vtsep {

// ---------------------------------------------------------------- VoltageMap

VoltageMap::VoltageMap(Graph base) : base_(std::move(base)) {
    if (base_.is_directed()) throw std::invalid_argument("voltage maps live on undirected base graphs");
    for (auto [u, v] : base_.edge_list()) {
        value_[key(u, v)] = 0;
        value_[key(v, u)] = 0;
    }
}

VoltageMap VoltageMap::zero(Graph base) { return VoltageMap(std::move(base)); }

int VoltageMap::operator()(int u, int v) const {
    auto it = value_.find(key(u, v));
    if (it == value_.end())
        throw std::invalid_argument("no arc " + std::to_string(u) + "->" + std::to_string(v) +
                                    " in the base graph");
    return it->second;
}

void VoltageMap::set(int u, int v, int value) {
    if (!value_.count(key(u, v)))
        throw std::invalid_argument("no arc " + std::to_string(u) + "->" + std::to_string(v) +
                                    " in the base graph");
    value_[key(u, v)] = value;
    value_[key(v, u)] = -value;
}

int VoltageMap::max_abs() const {
    int m = 0;
    for (const auto& [k, v] : value_) m = std::max(m, std::abs(v));
    return m;
}

long long VoltageMap::cycle_sum(const std::vector<int>& walk) const {
    if (walk.size() < 2 || walk.front() != walk.back())
        throw std::invalid_argument("closed walk must return to its start");
    long long sum = 0;
    for (size_t i = 0; i + 1 < walk.size(); ++i) sum += (*this)(walk[i], walk[i + 1]);
    return sum;
}

// -------------------------------------------------------------- construction

CoverWindow build_cover_window(const VoltageMap& mu, int half_width) {
    // The derived cover is exactly the window of the periodic presentation
    // whose cell keeps the zero-voltage edges and whose jumps are the
    // nonzero-voltage edges.
    std::vector<std::pair<int, int>> flat;
    std::vector<Jump> jumps;
    for (auto [u, v] : mu.base().edge_list()) {
        int k = mu(u, v);
        if (k == 0)
            flat.emplace_back(u, v);
        else
            jumps.push_back({u, v, k});
    }
    PeriodicPresentation p = make_periodic(mu.base().vertex_count(), flat, jumps);
    return window(p, half_width);
}

VoltageMap negate_voltage(const VoltageMap& mu) {
    VoltageMap out(mu.base());
    for (auto [u, v] : mu.base().edge_list()) out.set(u, v, -mu(u, v));
    return out;
}

VoltageMap add_delta(const VoltageMap& mu, const VertexSet& s, int m) {
    if (s.universe() != mu.base().vertex_count())
        throw std::invalid_argument("set universe does not match base graph");
    std::vector<char> in_s = s.mask();
    VoltageMap out(mu.base());
    for (auto [u, v] : mu.base().edge_list()) {
        int d = 0;
        if (in_s[u] && !in_s[v]) d = m;
        if (!in_s[u] && in_s[v]) d = -m;
        out.set(u, v, mu(u, v) + d);
    }
    return out;
}

VoltageMap mu_from_tube(const Graph& g, const TubeCertificate& cert, const Permutation& phi) {
    if (auto bad = find_violated_edge(g, phi))
        throw std::invalid_argument("phi is not an automorphism (breaks edge " + std::to_string(bad->first) +
                                    "-" + std::to_string(bad->second) + ")");
    std::vector<char> in_l = phi.apply_to(cert.L).mask();
    std::vector<char> in_a = phi.apply_to(cert.A).mask();
    VoltageMap out(g);
    for (auto [u, v] : g.edge_list()) {
        if (in_l[u] && in_a[v])
            out.set(u, v, 1);
        else if (in_l[v] && in_a[u])
            out.set(u, v, -1);
    }
    return out;
}

LayerDecompositionReport layer_decomposition_check(const Graph& g, const TubeCertificate& cert,
                                                   int half_width) {
    LayerDecompositionReport rep;

    // Precondition: deleting the L-A edges leaves the base connected.
    std::vector<char> in_l = cert.L.mask();
    std::vector<char> in_a = cert.A.mask();
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edge_list())
        if (!((in_l[u] && in_a[v]) || (in_l[v] && in_a[u]))) kept.emplace_back(u, v);
    Graph base_cut = Graph::undirected(g.vertex_count(), kept);
    rep.precondition_ok = is_connected(base_cut);
    if (!rep.precondition_ok)
        throw std::invalid_argument("base graph minus the L-A edges is disconnected");

    VoltageMap mu = mu_from_tube(g, cert, Permutation::identity(g.vertex_count()));
    CoverWindow w = build_cover_window(mu, half_width);
    rep.window_connected = is_connected(w.graph);

    // Delete the lifted L-A edges; all nonzero-voltage edges are exactly those.
    std::vector<std::pair<int, int>> surviving;
    for (auto [x, y] : w.graph.edge_list()) {
        int u = w.cell_of[x], v = w.cell_of[y];
        if ((in_l[u] && in_a[v]) || (in_l[v] && in_a[u])) continue;
        surviving.emplace_back(x, y);
    }
    Graph cut = Graph::undirected(w.graph.vertex_count(), surviving);

    // Interior layers must be exactly the components they sit in.
    rep.layers_are_components = true;
    auto comps = connected_components(cut);
    std::vector<int> comp_of(cut.vertex_count(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    int L = w.half_width;
    for (int layer = -L + 1; layer <= L - 1; ++layer) {
        ++rep.interior_layers;
        int rep_comp = -1;
        for (int u = 0; u < g.vertex_count(); ++u) {
            int id = w.vertex_id(u, layer);
            if (rep_comp == -1) rep_comp = comp_of[id];
            if (comp_of[id] != rep_comp) rep.layers_are_components = false;
        }
        // The component containing the layer must not leak into other layers.
        if (rep_comp != -1)
            for (int v : comps[rep_comp])
                if (w.layer_of[v] != layer) rep.layers_are_components = false;
    }
    return rep;
}

}  // namespace vtsep
