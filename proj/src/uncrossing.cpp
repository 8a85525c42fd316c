#include "vtsep/uncrossing.hpp"

#include <string>

namespace vtsep {

namespace {

// Region labels for the self-check error message.
enum Region { rP, rQ, rS, rT, rU, rW, rX, rY, rZ };

const char* region_name(int r) {
    static const char* names[] = {"P", "Q", "S", "T", "U", "W", "X", "Y", "Z"};
    return names[r];
}

}  // namespace

RegionDecomposition regions(const Graph& g, const VertexSet& a1, const VertexSet& a2) {
    if (g.is_directed()) throw std::invalid_argument("region decomposition expects an undirected graph");
    if (a1.universe() != g.vertex_count() || a2.universe() != g.vertex_count())
        throw std::invalid_argument("set universe does not match graph");

    VertexSet b1 = boundary_profile(g, a1).vertex_boundary;
    VertexSet b2 = boundary_profile(g, a2).vertex_boundary;
    VertexSet closure1 = set_union(a1, b1);
    VertexSet closure2 = set_union(a2, b2);

    RegionDecomposition r;
    r.P = set_intersection(a1, a2);
    r.Q = set_intersection(b1, a2);
    r.T = set_intersection(b2, a1);
    r.U = set_intersection(b1, b2);
    r.S = set_difference(a2, closure1);
    r.W = set_difference(b2, closure1);
    r.X = set_difference(a1, closure2);
    r.Y = set_difference(b1, closure2);
    r.Z = set_difference(VertexSet::full(g.vertex_count()), set_union(closure1, closure2));

    // Forbidden-adjacency self-check; a hit means the boundary computation is
    // broken, not that the input is bad.
    std::vector<int> region_of(g.vertex_count(), -1);
    auto stamp = [&](const VertexSet& s, int label) {
        for (int v : s) {
            if (region_of[v] != -1) throw std::logic_error("region decomposition is not a partition");
            region_of[v] = label;
        }
    };
    stamp(r.P, rP);
    stamp(r.Q, rQ);
    stamp(r.S, rS);
    stamp(r.T, rT);
    stamp(r.U, rU);
    stamp(r.W, rW);
    stamp(r.X, rX);
    stamp(r.Y, rY);
    stamp(r.Z, rZ);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (region_of[v] == -1) throw std::logic_error("region decomposition misses a vertex");

    auto in_group = [&](int reg, std::initializer_list<int> group) {
        for (int x : group)
            if (reg == x) return true;
        return false;
    };
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            int ru = region_of[u], rv = region_of[v];
            bool bad = (in_group(ru, {rP, rQ, rS}) && in_group(rv, {rX, rY, rZ})) ||
                       (in_group(rv, {rP, rQ, rS}) && in_group(ru, {rX, rY, rZ})) ||
                       (in_group(ru, {rP, rT, rX}) && in_group(rv, {rS, rW, rZ})) ||
                       (in_group(rv, {rP, rT, rX}) && in_group(ru, {rS, rW, rZ}));
            if (bad)
                throw std::logic_error(std::string("forbidden adjacency between regions ") + region_name(ru) +
                                       " and " + region_name(rv));
        }
    }
    return r;
}

UncrossingReport uncrossing_report(const Graph& g, const VertexSet& a1, const VertexSet& a2) {
    UncrossingReport rep;
    rep.reg = regions(g, a1, a2);
    const RegionDecomposition& r = rep.reg;

    int ba1 = boundary_profile(g, a1).vertex_boundary.size();
    int ba2 = boundary_profile(g, a2).vertex_boundary.size();
    int bp = boundary_profile(g, r.P).vertex_boundary.size();
    VertexSet pqstx = set_union(set_union(set_union(r.P, r.Q), set_union(r.S, r.T)), r.X);
    int bpqstx = boundary_profile(g, pqstx).vertex_boundary.size();
    int bs = boundary_profile(g, r.S).vertex_boundary.size();
    int bx = boundary_profile(g, r.X).vertex_boundary.size();

    rep.lhs1 = bp + bpqstx;
    rep.rhs1 = ba1 + ba2;
    rep.holds1 = rep.lhs1 <= rep.rhs1;

    rep.lhs2 = bs + bx;
    rep.rhs2 = ba1 + ba2;
    rep.holds2 = rep.lhs2 <= rep.rhs2;

    rep.third_applicable = (ba2 == bp && bp == bs);
    if (rep.third_applicable) {
        rep.third_k = ba2;
        rep.q_union_u = set_union(r.Q, r.U).size();
        rep.holds3 = 2 * rep.q_union_u >= rep.third_k;
    }
    return rep;
}

}  // namespace vtsep
