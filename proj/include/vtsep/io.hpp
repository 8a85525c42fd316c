#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vtsep/covers.hpp"
#include "vtsep/generators.hpp"
#include "vtsep/graph.hpp"
#include "vtsep/symmetry.hpp"
#include "vtsep/treewidth.hpp"

namespace vtsep {

// Line-oriented text formats.  Parsers reject loops, duplicates and
// out-of-range ids.
//
//   graph:        "graph <n> <m> <undirected|directed>" + m lines "u v"
//   vertex set:   one line of whitespace-separated ids
//   permutations: one permutation per line, n space-separated images
//   periodic:     "periodic <c> <m> <j>" + m cell-edge lines + j jump lines "u v k"
//   voltage:      "voltage <m>" + m lines "u v k", one orientation per base edge
//   tree dec.:    "td <b> <n>" + b lines "bag <i> v..." + b-1 lines "tedge i j"

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

VertexSet read_vertex_set(std::istream& in, int universe);
void write_vertex_set(std::ostream& out, const VertexSet& s);

std::vector<Permutation> read_permutations(std::istream& in, int n);
void write_permutations(std::ostream& out, const std::vector<Permutation>& perms);

PeriodicPresentation read_periodic(std::istream& in);
void write_periodic(std::ostream& out, const PeriodicPresentation& p);

VoltageMap read_voltage(std::istream& in, const Graph& base);
void write_voltage(std::ostream& out, const VoltageMap& mu);

TreeDecomposition read_tree_decomposition(std::istream& in, int graph_vertices);
void write_tree_decomposition(std::ostream& out, const TreeDecomposition& td);

// File convenience wrappers; throw std::invalid_argument on unreadable paths.
Graph load_graph(const std::string& path);
VertexSet load_vertex_set(const std::string& path, int universe);
std::vector<Permutation> load_permutations(const std::string& path, int n);
PeriodicPresentation load_periodic(const std::string& path);
VoltageMap load_voltage(const std::string& path, const Graph& base);
TreeDecomposition load_tree_decomposition(const std::string& path, int graph_vertices);

}  // namespace vtsep
