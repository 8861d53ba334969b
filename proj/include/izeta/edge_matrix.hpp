#pragma once

#include <vector>

#include "izeta/graph.hpp"
#include "izeta/types.hpp"

namespace izeta {

// One directed arc of the oriented edge set.
struct Arc {
  int origin = 0;
  int terminus = 0;
  int edge = 0;  // index of the underlying undirected edge
};

// The 2*epsilon arcs of a validated graph under the canonical labelling:
// arc j (0 <= j < epsilon) is edge j oriented from its lower-indexed endpoint
// to its higher-indexed endpoint (parallel edges all point the same way), and
// arc epsilon + j is its reversal.
struct OrientedEdgeSet {
  std::vector<Arc> arcs;
  int epsilon = 0;

  int dim() const { return 2 * epsilon; }
  int inverse(int i) const { return i < epsilon ? i + epsilon : i - epsilon; }
};

OrientedEdgeSet orient_edges(const ValidatedGraph& g);

// Non-backtracking arc adjacency matrix W: w(i,j) = 1 iff arc j continues
// arc i (terminus(i) == origin(j)) and j is not the reversal of i.
// The successor lists are the sparse view of the same relation and are what
// the exact power-trace engine iterates over.
struct EdgeMatrix {
  IntMatrix w;
  std::vector<std::vector<int>> successors;
  int epsilon = 0;

  int dim() const { return static_cast<int>(w.rows()); }
};

EdgeMatrix build_edge_matrix(const OrientedEdgeSet& oriented);

// True iff the arc digraph is strongly connected (it is, for every validated
// graph with rank >= 2; exposed for property tests).
bool strongly_connected(const EdgeMatrix& m);

}  // namespace izeta
