#pragma once

#include <optional>

#include "vtsep/graph.hpp"

namespace vtsep {

struct TreeDecomposition {
    Graph tree;                   // undirected, acyclic, connected
    std::vector<VertexSet> bags;  // one per tree node, over V(g)
};

/// Checks the three tree-decomposition axioms and returns the width
/// (max bag size - 1).  Errors identify the violated axiom and a witness.
int verify_td(const Graph& g, const TreeDecomposition& td);

/// Constructive balanced separator: orients tree edges toward heavy
/// components and returns the bag of a sink node.  Requires width < k; the
/// returned S satisfies |S| <= k and no component of g - S holds more than
/// half of W (verified before returning).
VertexSet balanced_separator(const Graph& g, const TreeDecomposition& td, const VertexSet& w, int k);

struct TdSearchResult {
    std::optional<TreeDecomposition> td;
    /// True when the search ran to completion, so an empty result proves
    /// treewidth >= k; false means the budget ran out first.
    bool complete = false;
    long long nodes = 0;
};

/// Branch-and-bound search for a tree decomposition of width < k via
/// elimination orders with safe reductions (simplicial / low degree) and
/// eliminated-set memoization.
TdSearchResult greedy_td_search(const Graph& g, int k, long long budget = 2'000'000);

}  // namespace vtsep
