#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/canonical.hpp"
#include "symcensus/constructions.hpp"
#include "symcensus/graph.hpp"
#include "symcensus/perm_group.hpp"

namespace symcensus {

struct TransitivityReport {
  long long vertex_orbits = 0;
  long long edge_orbits = 0;
  long long arc_orbits = 0;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
};

// Orbit counts of A on vertices, edges, and arcs. A must consist of
// automorphisms of g (each generator is checked).
TransitivityReport transitivity(const Graph& g, const PermGroup& A);

struct SLevelReport {
  bool vertex_transitive = false;
  bool arc_transitive = false;
  // Largest s >= 1 such that Aut(g) is transitive on s-arcs; 0 when not
  // arc-transitive. For connected valency >= 3 graphs s is finite.
  int s = 0;
  BigInt aut_order = 0;
  // aut_order / n when vertex-transitive (orbit-stabilizer), else 0.
  BigInt stabilizer_order = 0;
  // For tetravalent arc-transitive graphs the admissible levels are
  // s in {1,2,3,4,7} with vertex stabilizers: s=1 -> a 2-group; s=2 -> order
  // 12 or 24; s=3 -> 36, 72 or 144; s=4 -> 432; s=7 -> 11664. Any mismatch
  // is flagged here rather than thrown: it would mean the engine
  // contradicted itself.
  bool stabilizer_consistent = true;
  std::string stabilizer_note;
};

// Requires g connected and regular with valency >= 3 (on valency-2 graphs s
// is unbounded). The transitivity level is found by growing the orbit of a
// base s-arc under the automorphism generators and comparing with the total
// count n*d*(d-1)^{s-1}.
SLevelReport s_level(const Graph& g);
SLevelReport s_level(const Graph& g, const SearchResult& aut);

// True iff |Aut(g)| equals the number of arcs and g is arc-transitive, i.e.
// Aut acts regularly on arcs. Same preconditions as s_level.
bool one_regular(const Graph& g);

struct RegularSearchOptions {
  // Vertex stabilizer sizes above this make the search Inconclusive (the
  // candidate cosets are enumerated explicitly).
  long long stabilizer_cap = 200000;
  long long node_cap = 1000000;
};

enum class RegularSearchStatus { Found, NoneExists, Inconclusive };

struct RegularSubgroupResult {
  RegularSearchStatus status = RegularSearchStatus::Inconclusive;
  // When Found: generators of a subgroup of A acting regularly on V(g)
  // (witnesses that g is a Cayley graph).
  std::vector<Permutation> generators;
  std::string note;
};

// Searches A for a regular subgroup by assigning, for every neighbor u of
// vertex 0, an element g_u with g_u(0) = u, drawn from the fixed-point-free
// part of the coset A_0 t_u. Partial groups must stay semiregular with order
// dividing n; a full assignment is automatically transitive (orbit closure
// along edges), hence regular. Exhaustion without cap hits proves NoneExists.
RegularSubgroupResult find_regular_subgroup(const Graph& g, const PermGroup& A,
                                            const RegularSearchOptions& options = {});

struct ReconstructedCayley {
  Graph graph;
  // Maps the reconstruction's vertex i (the i-th enumerated subgroup
  // element e_i) to the input vertex e_i(0); an isomorphism onto the input.
  Permutation to_input;
};

// Rebuilds the Cayley graph of a regular action: vertices are the subgroup
// elements, the connection set is {r : r(0) adjacent to 0}.
ReconstructedCayley cayley_of_regular_action(const Graph& g,
                                             const std::vector<Permutation>& regular_gens);

// True iff the right-translation group R(G) is normal in Aut(g): every
// conjugate of a translation generator by an automorphism generator sifts
// back into R(G). g must be cayley(G, S).graph with that construction's
// vertex labeling (the translations are verified to be automorphisms).
bool is_normal_cayley(const CayleyGraph& cg);

}  // namespace symcensus
