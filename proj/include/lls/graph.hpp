#pragma once

#include <utility>
#include <vector>

#include "lls/chain.hpp"

namespace lls {

// Two components intersect iff the entrywise-max merge of their local
// vanishing data is nonempty on every chain component.  Reflexive and
// symmetric; reproduces all pairwise verdicts of the pinned reference
// instance.
bool components_intersect(const Component& c1, const Component& c2,
                          const ChainConfig& cfg, const BNProblem& p);

// Vertices are the enumerated components in canonical order; an edge joins
// every distinct intersecting pair.
struct ComponentGraph {
  BNProblem problem;
  ChainConfig chain;
  std::vector<Component> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographic

  // Number of connected components of the undirected graph; 0 when empty.
  int connected_component_count() const;

  // Vertex -> connected-component id, ids assigned by first occurrence.
  std::vector<int> partition() const;

  // Nonempty and a single connected component.  The empty graph is not
  // connected.
  bool is_connected() const;
};

ComponentGraph build_graph(const BNProblem& p, const ChainConfig& cfg);

}  // namespace lls
