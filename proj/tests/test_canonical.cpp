#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "symcensus/canonical.hpp"
#include "symcensus/constructions.hpp"
#include "symcensus/graph.hpp"

using namespace symcensus;

namespace {

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Permutation random_relabeling(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
  return Permutation(img);
}

}  // namespace

TEST_CASE("automorphism generators are automorphisms and the order matches brute force") {
  std::mt19937_64 rng(7);
  SearchOptions opt;
  opt.canonical = false;
  for (int n = 2; n <= 6; ++n)
    for (int iter = 0; iter < 12; ++iter) {
      const Graph g = random_graph(n, rng);
      const SearchResult res = canonical_search(g, {}, opt);
      for (const auto& p : res.generators) CHECK(preserves_adjacency(g, p));
      CHECK(res.aut_order == (long)oracles::brute_force_automorphisms(g).size());
    }
}

TEST_CASE("engine order equals backtracking oracle on medium graphs") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    const Graph g = random_graph(8, rng);
    CHECK(aut_order(g) == (long)oracles::backtracking_aut_count(g));
  }
  CHECK(aut_order(petersen()) == 120);
  CHECK(aut_order(octahedron()) == 48);
  CHECK(aut_order(complete_graph(5)) == 120);
  CHECK(aut_order(cycle(12)) == 24);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(23);
  for (const Graph& g : {petersen(), octahedron(), twin_expanded_cycle(6)}) {
    const Graph canon = canonical_form(g);
    for (int iter = 0; iter < 100; ++iter) {
      const Graph h = apply_labeling(g, random_relabeling(g.vertex_count(), rng));
      CHECK(canonical_form(h) == canon);
    }
  }
  // One larger instance: a 54-vertex Cayley graph.
  const Graph big = family('a', 3).cay.graph;
  const Graph canon = canonical_form(big);
  for (int iter = 0; iter < 5; ++iter) {
    const Graph h = apply_labeling(big, random_relabeling(big.vertex_count(), rng));
    CHECK(canonical_form(h) == canon);
  }
}

TEST_CASE("canonical labeling maps the graph onto its canonical form") {
  for (const Graph& g : {petersen(), octahedron(), cycle(7)}) {
    CHECK(apply_labeling(g, canonical_labeling(g)) == canonical_form(g));
  }
}

TEST_CASE("isomorphism witnesses are verified mappings") {
  std::mt19937_64 rng(31);
  const Graph g = petersen();
  const Graph h = apply_labeling(g, random_relabeling(10, rng));
  const auto w = isomorphism(g, h);
  REQUIRE(w.has_value());
  CHECK(apply_labeling(g, *w) == h);
  CHECK(oracles::exists_isomorphism(g, h));
}

TEST_CASE("non-isomorphic pairs of equal order and valency are separated") {
  // Both tetravalent on 24 vertices, but with different two-step structure.
  const Graph a = twin_expanded_cycle(12);
  const StructuredGroup z24 = make_group({{24}, false, {}});
  const Graph b = cayley(z24, {z24.from_coords({1}), z24.from_coords({23}),
                               z24.from_coords({5}), z24.from_coords({19})})
                      .graph;
  CHECK(a.valency() == b.valency());
  CHECK_FALSE(isomorphism(a, b).has_value());
  CHECK(canonical_form(a) != canonical_form(b));

  // Classic small pair: C_6 vs. two triangles.
  const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2},
                                                    {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(isomorphism(cycle(6), two_triangles).has_value());
  CHECK_FALSE(oracles::exists_isomorphism(cycle(6), two_triangles));
}

TEST_CASE("vertex colors constrain the search") {
  // On C_4, a proper 2-coloring keeps only the color-preserving symmetries.
  const Graph g = cycle(4);
  CHECK(aut_order(g) == 8);
  CHECK(aut_order(g, {0, 1, 0, 1}) == 4);
  CHECK(aut_order(g, {0, 1, 2, 1}) == 2);
}

TEST_CASE("node budget is enforced") {
  SearchOptions opt;
  opt.max_nodes = 1;
  CHECK_THROWS_AS(canonical_search(twin_expanded_cycle(8), {}, opt), CapExceeded);
}

TEST_CASE("search statistics are populated") {
  const SearchResult res = canonical_search(petersen());
  CHECK(res.stats.nodes > 0);
  REQUIRE(res.canonical_form.has_value());
  CHECK(res.canonical_form->vertex_count() == 10);
  CHECK(res.aut_order == 120);
}
