#pragma once

// Graphviz export: directed Hasse diagrams and induced subgraphs of the
// permutohedral graph. Plain DOT, no HTML labels, nodes in lexicographic
// order so output is stable.

#include <string>
#include <vector>

#include "posetlab/enumerations.hpp"

namespace posetlab {

std::string hasse_dot(const Poset& p);

struct InducedEdge {
  std::size_t from;  // index into EnumSet::members()
  std::size_t to;
  EdgeLabel label;
};

/// Edges of the permutohedral graph with both ends in s, from < to.
std::vector<InducedEdge> induced_edges(const EnumSet& s);

/// Undirected graph over s; each edge carries label="{u,v}".
std::string permutohedral_dot(const EnumSet& s);

}  // namespace posetlab
