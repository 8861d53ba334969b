#include "izeta/edge_matrix.hpp"

#include <algorithm>
#include <queue>

namespace izeta {

OrientedEdgeSet orient_edges(const ValidatedGraph& g) {
  OrientedEdgeSet s;
  s.epsilon = g.epsilon;
  s.arcs.resize(static_cast<size_t>(2 * g.epsilon));
  for (int j = 0; j < g.epsilon; ++j) {
    auto [u, v] = g.graph.edges[static_cast<size_t>(j)];
    if (u > v) std::swap(u, v);  // canonical direction: low index -> high index
    s.arcs[static_cast<size_t>(j)] = Arc{u, v, j};
    s.arcs[static_cast<size_t>(g.epsilon + j)] = Arc{v, u, j};
  }
  return s;
}

EdgeMatrix build_edge_matrix(const OrientedEdgeSet& oriented) {
  const int d = oriented.dim();
  EdgeMatrix m;
  m.epsilon = oriented.epsilon;
  m.w = IntMatrix::Zero(d, d);
  m.successors.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    const int inv_i = oriented.inverse(i);
    for (int j = 0; j < d; ++j) {
      if (j == inv_i) continue;  // no backtracking
      if (oriented.arcs[static_cast<size_t>(i)].terminus ==
          oriented.arcs[static_cast<size_t>(j)].origin) {
        m.w(i, j) = 1;
        m.successors[static_cast<size_t>(i)].push_back(j);
      }
    }
  }
  return m;
}

bool strongly_connected(const EdgeMatrix& m) {
  const int d = m.dim();
  if (d == 0) return false;

  auto reach_all = [d](const std::vector<std::vector<int>>& succ) {
    std::vector<char> seen(static_cast<size_t>(d), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : succ[static_cast<size_t>(u)]) {
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          ++count;
          q.push(v);
        }
      }
    }
    return count == d;
  };

  std::vector<std::vector<int>> pred(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j : m.successors[static_cast<size_t>(i)]) {
      pred[static_cast<size_t>(j)].push_back(i);
    }
  }
  return reach_all(m.successors) && reach_all(pred);
}

}  // namespace izeta
