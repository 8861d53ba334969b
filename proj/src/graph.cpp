#include "izeta/graph.hpp"

#include <queue>
#include <sstream>

#include "izeta/errors.hpp"

namespace izeta {

int Graph::intern(const std::string& name) {
  auto it = vertex_index.find(name);
  if (it != vertex_index.end()) return it->second;
  const int id = vertex_count();
  vertex_names.push_back(name);
  vertex_index.emplace(name, id);
  return id;
}

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::istringstream in{std::string(text)};
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;      // blank line
    if (u[0] == '#') continue;         // comment
    if (!(fields >> v) || (fields >> extra)) {
      fail_validation("MalformedLine",
                      "line " + std::to_string(line_no) +
                          ": expected exactly two vertex labels, got \"" + line + "\"");
    }
    if (u == v) {
      fail_validation("SelfLoop", "line " + std::to_string(line_no) +
                                      ": self-loop at vertex \"" + u + "\"");
    }
    // sequenced: first-appearance indexing must not depend on argument order
    const int iu = g.intern(u);
    const int iv = g.intern(v);
    g.edges.emplace_back(iu, iv);
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges) {
    out << g.vertex_names[static_cast<size_t>(u)] << ' '
        << g.vertex_names[static_cast<size_t>(v)] << '\n';
  }
  return out.str();
}

Graph graph_from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  for (const auto& [u, v] : edges) {
    if (u == v) fail_validation("SelfLoop", "self-loop at vertex \"" + u + "\"");
    const int iu = g.intern(u);
    const int iv = g.intern(v);
    g.edges.emplace_back(iu, iv);
  }
  return g;
}

namespace {

// Adjacency lists over vertex indices (parallel edges contribute repeats).
std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  return adj;
}

}  // namespace

Bipartition is_bipartite(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.vertex_count();
  Bipartition b;
  b.color.assign(static_cast<size_t>(n), -1);
  if (n == 0) return b;
  std::queue<int> q;
  b.color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<size_t>(u)]) {
      if (b.color[static_cast<size_t>(v)] < 0) {
        b.color[static_cast<size_t>(v)] = 1 - b.color[static_cast<size_t>(u)];
        q.push(v);
      } else if (b.color[static_cast<size_t>(v)] == b.color[static_cast<size_t>(u)]) {
        b.bipartite = false;
        b.color.clear();
        return b;
      }
    }
  }
  b.bipartite = true;
  return b;
}

ValidatedGraph validate_graph(Graph g) {
  if (g.vertex_count() == 0 || g.edge_count() == 0) {
    fail_validation("NotConnected", "graph is empty");
  }
  const auto adj = adjacency(g);
  const int n = g.vertex_count();

  // Connectivity.
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<size_t>(u)]) {
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != n) {
    fail_validation("NotConnected", "graph has " + std::to_string(n - reached) +
                                        " vertex(es) unreachable from \"" +
                                        g.vertex_names[0] + "\"");
  }

  ValidatedGraph vg;
  vg.nu = n;
  vg.epsilon = g.edge_count();
  vg.degree.resize(static_cast<size_t>(n));
  vg.min_degree = n > 0 ? static_cast<int>(adj[0].size()) : 0;
  vg.max_degree = 0;
  for (int u = 0; u < n; ++u) {
    const int d = static_cast<int>(adj[static_cast<size_t>(u)].size());
    vg.degree[static_cast<size_t>(u)] = d;
    if (d < vg.min_degree) vg.min_degree = d;
    if (d > vg.max_degree) vg.max_degree = d;
    if (d <= 1) {
      fail_validation("HasDegreeOneVertex",
                      "vertex \"" + g.vertex_names[static_cast<size_t>(u)] +
                          "\" has degree " + std::to_string(d) +
                          "; minimum degree 2 is required");
    }
  }

  // rank = eps - nu + 1 (connected); rank 1 means the graph is one cycle and
  // the whole theory degenerates (a single prime, R on the unit circle).
  if (vg.epsilon - vg.nu + 1 < 2) {
    fail_validation("IsCycleGraph",
                    "graph is a single cycle (rank 1); at least two independent "
                    "cycles are required");
  }

  auto bip = is_bipartite(g);
  vg.bipartite = bip.bipartite;
  vg.coloring = std::move(bip.color);
  vg.graph = std::move(g);
  return vg;
}

}  // namespace izeta
