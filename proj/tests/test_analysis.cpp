#include <doctest.h>

#include <string>

#include "symcensus/analysis.hpp"
#include "symcensus/constructions.hpp"
#include "symcensus/graph.hpp"

using namespace symcensus;

TEST_CASE("tristate round trip") {
  for (TriState t : {TriState::Yes, TriState::No, TriState::Inconclusive})
    CHECK(tristate_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(tristate_from_string("maybe"), std::invalid_argument);
}

TEST_CASE("content hash is FNV-1a") {
  CHECK(content_hash("") == 14695981039346656037ull);
  CHECK(content_hash("a") != content_hash("b"));
  CHECK(content_hash("6 12") != content_hash("6 12\n"));
}

TEST_CASE("full pipeline on the octahedron") {
  const AnalysisReport rep = analyze(octahedron(), "O6");
  CHECK(rep.graph_id == "O6");
  CHECK(rep.n == 6);
  CHECK(rep.m == 12);
  CHECK(rep.valency == 4);
  CHECK(rep.connected);
  CHECK_FALSE(rep.bipartite);
  CHECK(rep.aut_order == "48");
  CHECK(rep.s == 1);
  CHECK(rep.vertex_transitive);
  CHECK(rep.edge_transitive);
  CHECK(rep.arc_transitive);
  CHECK_FALSE(rep.one_regular);  // 48 = 8 * 6, not 4 * 6
  CHECK(rep.cayley == TriState::Yes);  // the regular-subgroup search finds Z_6
  CHECK(rep.stabilizer_order == "8");
  CHECK(rep.validator == "consistent");
}

TEST_CASE("a supplied Cayley structure decides the normality question") {
  const FamilyGraph fg = family('e', 5);
  const AnalysisReport rep = analyze(fg.cay.graph, "e5", &fg.cay);
  CHECK(rep.n == 150);
  CHECK(rep.valency == 4);
  CHECK(rep.aut_order == "1200");
  CHECK(rep.s == 1);
  CHECK(rep.arc_transitive);
  CHECK_FALSE(rep.one_regular);
  CHECK(rep.cayley == TriState::Yes);
  CHECK(rep.normal_cayley == TriState::Yes);
  CHECK(rep.stabilizer_order == "8");
  CHECK(rep.validator == "consistent");
}

TEST_CASE("non-transitive input degrades gracefully") {
  // A path: connected, bipartite, irregular, certainly not vertex-transitive.
  const Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const AnalysisReport rep = analyze(path, "P4");
  CHECK(rep.valency == -1);
  CHECK(rep.s == 0);
  CHECK_FALSE(rep.vertex_transitive);
  CHECK_FALSE(rep.arc_transitive);
  CHECK(rep.cayley == TriState::No);  // not vertex-transitive, so certainly not Cayley
  CHECK(rep.stabilizer_order.empty());
  CHECK(rep.validator == "inapplicable");
  CHECK(rep.bipartite);
}

TEST_CASE("disconnected input reports no transitivity level") {
  const Graph two_triangles =
      Graph::from_edges(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}});
  const AnalysisReport rep = analyze(two_triangles, "2C3");
  CHECK_FALSE(rep.connected);
  CHECK(rep.s == 0);
  CHECK(rep.validator == "inapplicable");
}

TEST_CASE("JSON line round trip is exact") {
  const FamilyGraph fg = family('a', 3);
  AnalysisReport rep = analyze(fg.cay.graph, "a3", &fg.cay);
  rep.family = "family-a";
  rep.params = "p=3";
  const std::string line = to_json_line(rep);
  CHECK(line.find('\n') == std::string::npos);

  const AnalysisReport back = report_from_json_line(line);
  CHECK(to_json_line(back) == line);
  CHECK(back.graph_id == "a3");
  CHECK(back.family == "family-a");
  CHECK(back.params == "p=3");
  CHECK(back.n == 54);
  CHECK(back.aut_order == "216");
  CHECK(back.s == 1);
  CHECK(back.one_regular);
  CHECK(back.cayley == TriState::Yes);
  CHECK(back.stabilizer_order == "4");
  CHECK(back.validator == "consistent");

  CHECK_THROWS(report_from_json_line("not json"));
}
