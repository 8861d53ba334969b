#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace izeta {

// Finite undirected multigraph.  Parallel edges are kept as separate entries;
// self-loops are rejected at parse/build time.  Vertices are indexed by first
// appearance in the input, and the original names are retained for reports.
struct Graph {
  std::vector<std::string> vertex_names;
  std::unordered_map<std::string, int> vertex_index;
  std::vector<std::pair<int, int>> edges;  // endpoints by vertex index

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  // Returns the index for `name`, inserting a fresh vertex if unseen.
  int intern(const std::string& name);
};

// Parses the whitespace edge-list format: one edge per line, two vertex
// labels separated by whitespace.  Blank lines and lines starting with '#'
// are skipped.  Throws a validation Error (MalformedLine / SelfLoop) with a
// 1-based line number on bad input.
Graph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list up to formatting: one "u v" line per edge in
// stored order.
std::string serialize_edge_list(const Graph& g);

// Convenience builder used by tests and fixtures.
Graph graph_from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;  // 0/1 per vertex when bipartite, else empty
};

// Two-coloring via BFS.  Assumes the graph is connected.
Bipartition is_bipartite(const Graph& g);

// A graph that passed all structural preconditions for the zeta machinery:
// connected, no self-loops, minimum degree >= 2, and not a single cycle
// (rank >= 2, so the prime count is infinite and the Perron radius exceeds 1).
struct ValidatedGraph {
  Graph graph;
  int nu = 0;       // vertex count
  int epsilon = 0;  // undirected edge count
  std::vector<int> degree;
  int min_degree = 0;
  int max_degree = 0;
  bool bipartite = false;
  std::vector<int> coloring;  // empty when not bipartite
};

// Checks connectivity, degrees, and the cycle-graph degeneracy, and computes
// the bipartition.  Throws validation Errors: NotConnected,
// HasDegreeOneVertex (naming an offending vertex), IsCycleGraph.
ValidatedGraph validate_graph(Graph g);

}  // namespace izeta
