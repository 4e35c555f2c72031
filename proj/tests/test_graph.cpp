#include <doctest.h>

#include <set>

#include "symcensus/constructions.hpp"
#include "symcensus/graph.hpp"

using namespace symcensus;

namespace {

GraphIoError::Kind kind_of(const std::string& text) {
  try {
    read_graph_string(text);
  } catch (const GraphIoError& e) {
    return e.kind;
  }
  FAIL("expected a parse error");
  return GraphIoError::Kind::BadHeader;
}

}  // namespace

TEST_CASE("graph text format round trip") {
  const Graph g = octahedron();
  const Graph back = read_graph_string(write_graph(g));
  CHECK(back == g);
  // Edges are accepted in either orientation and any order.
  CHECK(read_graph_string("3 2\n2 1\n0 2\n") == Graph::from_edges(3, {{1, 2}, {0, 2}}));
}

TEST_CASE("each parse malformation has its own kind") {
  CHECK(kind_of("x 2\n0 1\n") == GraphIoError::Kind::BadHeader);
  CHECK(kind_of("-1 0\n") == GraphIoError::Kind::BadHeader);
  CHECK(kind_of("3 1\n0 zero\n") == GraphIoError::Kind::BadEdgeLine);
  CHECK(kind_of("3 1\n0 3\n") == GraphIoError::Kind::VertexOutOfRange);
  CHECK(kind_of("3 1\n1 1\n") == GraphIoError::Kind::Loop);
  CHECK(kind_of("3 2\n0 1\n1 0\n") == GraphIoError::Kind::DuplicateEdge);
  CHECK(kind_of("3 2\n0 1\n") == GraphIoError::Kind::EdgeCountMismatch);
}

TEST_CASE("basic accessors") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {3, 1}, {1, 2}});
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 3);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2, 3});  // sorted
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.valency().has_value());
  CHECK_FALSE(g.is_connected());  // vertex 4 is isolated
  CHECK(cycle(5).valency() == 2);
  CHECK(cycle(5).is_connected());
}

TEST_CASE("loops and duplicate edges are rejected by builders") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("bipartiteness with witnesses") {
  const auto even = bipartiteness(cycle(6));
  CHECK(even.bipartite);
  for (const auto& [u, v] : cycle(6).edges()) CHECK(even.coloring[u] != even.coloring[v]);

  const auto odd = bipartiteness(cycle(5));
  CHECK_FALSE(odd.bipartite);
  const auto& walk = odd.odd_closed_walk;
  REQUIRE(!walk.empty());
  CHECK(walk.front() == walk.back());
  CHECK(walk.size() % 2 == 0);  // odd number of steps
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) CHECK(cycle(5).adjacent(walk[i], walk[i + 1]));
}

TEST_CASE("s-arc validity") {
  const Graph g = cycle(4);
  CHECK(is_valid_s_arc(g, {0, 1, 2}));
  CHECK_FALSE(is_valid_s_arc(g, {0, 1, 0}));   // immediate backtracking
  CHECK_FALSE(is_valid_s_arc(g, {0, 2}));      // not an edge
  CHECK(is_valid_s_arc(g, {3}));               // a 0-arc is a vertex
}

TEST_CASE("s-arc count formula on the complete graph") {
  const Graph k4 = complete_graph(4);
  CHECK(count_s_arcs(k4, 0) == 4);
  CHECK(count_s_arcs(k4, 1) == 12);
  CHECK(count_s_arcs(k4, 2) == 24);
  CHECK(count_s_arcs(k4, 3) == 48);
  for (int s = 0; s <= 5; ++s)
    CHECK(count_s_arcs(k4, s) == (long)enumerate_s_arcs(k4, s).size());
  CHECK_THROWS_AS(count_s_arcs(Graph::from_edges(3, {{0, 1}}), 1), std::invalid_argument);
}

TEST_CASE("s-arc enumeration is duplicate free and capped") {
  const auto arcs = enumerate_s_arcs(octahedron(), 2);
  CHECK(arcs.size() == 72);  // 6*4*3
  CHECK(std::set<SArc>(arcs.begin(), arcs.end()).size() == arcs.size());
  CHECK_THROWS_AS(enumerate_s_arcs(octahedron(), 2, 10), CapExceeded);
  const auto first = smallest_s_arc(octahedron(), 2);
  REQUIRE(first.has_value());
  CHECK(*first == arcs.front());
}

TEST_CASE("relabeling and adjacency preservation") {
  const Graph g = cycle(4);
  const Permutation rot({1, 2, 3, 0});
  CHECK(apply_labeling(g, rot) == g);
  CHECK(preserves_adjacency(g, rot));
  const Permutation bad({0, 2, 1, 3});
  CHECK_FALSE(preserves_adjacency(g, bad));
  CHECK(apply_labeling(g, bad) == Graph::from_edges(4, {{0, 2}, {1, 2}, {1, 3}, {0, 3}}));
}
