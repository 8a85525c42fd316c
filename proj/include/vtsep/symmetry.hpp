#pragma once

#include <optional>
#include <vector>

#include "vtsep/graph.hpp"

namespace vtsep {

/// Bijection on [0, n) given by its image array.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image.size()); }
    int apply(int v) const { return image.at(v); }
    bool is_identity() const;

    /// this after other: (a.compose(b))(v) = a(b(v)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    VertexSet apply_to(const VertexSet& s) const;

    bool operator==(const Permutation&) const = default;
};

bool is_automorphism(const Graph& g, const Permutation& p);
/// First adjacent pair broken by p, if any.
std::optional<std::pair<int, int>> find_violated_edge(const Graph& g, const Permutation& p);

/// Partition of [0, n) into blocks; block_of[v] is the block index of v.
struct BlockSystem {
    std::vector<VertexSet> blocks;
    std::vector<int> block_of;

    int universe() const { return static_cast<int>(block_of.size()); }
    int block_count() const { return static_cast<int>(blocks.size()); }
    bool is_singleton_system() const { return block_count() == universe(); }
    bool is_full_system() const { return block_count() == 1; }
    /// Singleton or one-block systems.
    bool is_trivial() const { return is_singleton_system() || is_full_system(); }

    /// Blocks renumbered so that block indices increase with their smallest member.
    static BlockSystem from_block_of(std::vector<int> block_of);
};

struct AutomorphismGroup {
    std::vector<Permutation> generators;
    long long order = 0;
};

/// Generators and exact order of Aut(g), found by backtracking with
/// degree/distance-profile pruning.  node_limit caps search nodes.
AutomorphismGroup find_automorphisms(const Graph& g, long long node_limit = 50'000'000);

struct OrbitResult {
    bool transitive = false;
    std::vector<VertexSet> orbits;
};

/// Orbits of the group generated by gens on [0, n).  When a graph is supplied,
/// every generator must preserve adjacency.
OrbitResult orbit_transitivity(int n, const std::vector<Permutation>& gens, const Graph* g = nullptr);

/// Minimal block system of a transitive action in which the seed pair is
/// co-located (union-find closure of generator images).
BlockSystem minimal_block_system(int n, const std::vector<Permutation>& gens, std::pair<int, int> seed);

/// All distinct minimal block systems over seeds (0, v); always contains the
/// singleton and full systems.
std::vector<BlockSystem> enumerate_block_systems(int n, const std::vector<Permutation>& gens);

/// Join (coarsest common refinement-upper-bound) of two block systems.
BlockSystem join_block_systems(const BlockSystem& a, const BlockSystem& b);

/// Verifies that every generator maps blocks onto blocks; returns the induced
/// permutation of block indices for each generator.
std::vector<Permutation> induced_block_action(const BlockSystem& sys, const std::vector<Permutation>& gens);

/// Quotient graph: blocks adjacent iff some cross edge exists; loops dropped.
Graph quotient_graph(const Graph& g, const BlockSystem& sys);

}  // namespace vtsep
