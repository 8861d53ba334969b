#include <algorithm>
#include <doctest.h>

#include "izeta/errors.hpp"
#include "izeta/graph.hpp"

#include "fixtures.hpp"

using namespace izeta;

TEST_SUITE("graph") {

TEST_CASE("parses labels, comments, and blank lines") {
  const Graph g = parse_edge_list("# header\n\na b\nb c\n c a \n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.vertex_names == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edges[2] == std::pair<int, int>{2, 0});
}

TEST_CASE("parallel edges are preserved as distinct entries") {
  const Graph g = parse_edge_list("u v\nu v\nv u\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("malformed line reports its line number") {
  try {
    parse_edge_list("a b\nc\n");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
    CHECK(e.code() == "MalformedLine");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), Error);
}

TEST_CASE("self-loops are rejected at parse time") {
  try {
    parse_edge_list("a b\nb b\n");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == "SelfLoop");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialize then parse is the identity on the edge structure") {
  for (const char* name : {"k4", "k33", "theta", "dumbbell", "petersen"}) {
    const Graph g = parse_edge_list(fixtures::load(name));
    const Graph h = parse_edge_list(serialize_edge_list(g));
    CHECK(h.vertex_names == g.vertex_names);
    CHECK(h.edges == g.edges);
  }
}

TEST_CASE("bipartition is found exactly on the bipartite fixtures") {
  CHECK(fixtures::graph("k33").bipartite);
  CHECK(fixtures::graph("theta").bipartite);
  CHECK_FALSE(fixtures::graph("k4").bipartite);
  CHECK_FALSE(fixtures::graph("dumbbell").bipartite);
  CHECK_FALSE(fixtures::graph("petersen").bipartite);

  const auto k33 = fixtures::graph("k33");
  int side = 0;
  for (int c : k33.coloring) side += c;
  CHECK(side == 3);  // 3 + 3 split
}

TEST_CASE("degree bookkeeping and the handshake identity") {
  for (const char* name : {"k4", "k33", "theta", "dumbbell", "petersen"}) {
    const auto g = fixtures::graph(name);
    long sum = 0;
    for (int d : g.degree) sum += d;
    CHECK(sum == 2L * g.epsilon);
    CHECK(g.min_degree >= 2);
    CHECK(g.max_degree == *std::max_element(g.degree.begin(), g.degree.end()));
  }
  CHECK(fixtures::graph("theta").degree == std::vector<int>{3, 3});
  CHECK(fixtures::graph("dumbbell").max_degree == 3);
}

TEST_CASE("a pendant vertex is rejected and named") {
  try {
    validate_graph(parse_edge_list("a b\nb c\nc a\nc d\n"));
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == "HasDegreeOneVertex");
    CHECK(std::string(e.what()).find("\"d\"") != std::string::npos);
  }
}

TEST_CASE("a disconnected graph is rejected") {
  const char* two_triangles = "a b\nb c\nc a\nx y\ny z\nz x\n";
  try {
    validate_graph(parse_edge_list(two_triangles));
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == "NotConnected");
  }
}

TEST_CASE("a bare cycle is rejected as degenerate") {
  try {
    validate_graph(parse_edge_list("a b\nb c\nc a\n"));
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == "IsCycleGraph");
  }
  // ...but the theta graph (rank 2) passes
  CHECK(fixtures::graph("theta").epsilon == 3);
}

TEST_CASE("fixture shapes") {
  const auto k4 = fixtures::graph("k4");
  CHECK(k4.nu == 4);
  CHECK(k4.epsilon == 6);
  const auto p = fixtures::graph("petersen");
  CHECK(p.nu == 10);
  CHECK(p.epsilon == 15);
  CHECK(p.min_degree == 3);
  CHECK(p.max_degree == 3);
}

}  // TEST_SUITE
