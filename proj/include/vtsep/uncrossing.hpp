#pragma once

#include "vtsep/graph.hpp"

namespace vtsep {

/// Nine-way split of V(G) induced by two sets and their boundaries:
///   P = A1 ∩ A2              Q = ∂A1 ∩ A2         T = ∂A2 ∩ A1
///   U = ∂A1 ∩ ∂A2            S = A2 \ (A1 ∪ ∂A1)  W = ∂A2 \ (A1 ∪ ∂A1)
///   X = A1 \ (A2 ∪ ∂A2)      Y = ∂A1 \ (A2 ∪ ∂A2) Z = the rest
struct RegionDecomposition {
    VertexSet P, Q, S, T, U, W, X, Y, Z;
};

/// Computes the decomposition from set algebra on boundary profiles and then
/// asserts the forbidden-adjacency pattern (no edges P,Q,S -- X,Y,Z and none
/// P,T,X -- S,W,Z) as an internal consistency check.
RegionDecomposition regions(const Graph& g, const VertexSet& a1, const VertexSet& a2);

struct UncrossingReport {
    RegionDecomposition reg;
    // (i)  |∂P| + |∂(P∪Q∪S∪T∪X)| <= |∂A1| + |∂A2|
    int lhs1 = 0, rhs1 = 0;
    // (ii) |∂S| + |∂X| <= |∂A1| + |∂A2|
    int lhs2 = 0, rhs2 = 0;
    // (iii) when |∂A2| = |∂P| = |∂S| = k: |Q ∪ U| >= k/2
    bool third_applicable = false;
    int third_k = 0;
    int q_union_u = 0;
    bool holds1 = false, holds2 = false, holds3 = false;

    bool all_hold() const { return holds1 && holds2 && (!third_applicable || holds3); }
};

UncrossingReport uncrossing_report(const Graph& g, const VertexSet& a1, const VertexSet& a2);

}  // namespace vtsep
