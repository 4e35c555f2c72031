#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/constructions.hpp"
#include "symcensus/graph.hpp"
#include "symcensus/group.hpp"
#include "symcensus/perm_group.hpp"
#include "symcensus/symmetry.hpp"

namespace symcensus {

// Edges {u,v} with u < v, sorted. The tree is the BFS tree grown from vertex
// 0 (neighbors scanned in sorted order), so it is a function of the graph.
std::vector<std::pair<int, int>> bfs_spanning_tree(const Graph& g);
// Complement of the BFS tree in the edge set, sorted.
std::vector<std::pair<int, int>> cotree_edges(const Graph& g);

// T-reduced voltage assignment: tree edges implicitly carry the identity and
// only cotree edges are mapped. The orientation stored is low-to-high; the
// reverse arc carries the inverse element.
struct VoltageAssignment {
  Graph base;
  StructuredGroup K;
  std::vector<std::pair<int, int>> tree;
  std::map<std::pair<int, int>, GroupElement> voltages;
};

// Validates: base connected, K abelian without the involution extension,
// voltage keys exactly the cotree edges, every element valid in K.
VoltageAssignment make_voltage_assignment(const Graph& base, const StructuredGroup& K,
                                          std::map<std::pair<int, int>, GroupElement> voltages);

// Text format:
//   line 1:  n |K| k n_1 ... n_k     (k cyclic factor orders, product |K|)
//   then one line per cotree edge:  u v g_1 ... g_k
// Tree edges are implicit. The base graph travels separately.
VoltageAssignment read_voltages(std::istream& in, const Graph& base);
VoltageAssignment read_voltages_string(const std::string& text, const Graph& base);
VoltageAssignment read_voltages_file(const std::string& path, const Graph& base);
std::string write_voltages(const VoltageAssignment& va);

struct ProjectionReport {
  bool is_covering = false;
  // Projection restricted to every neighborhood is a bijection onto the
  // image's neighborhood.
  bool locally_bijective = false;
  bool constant_fibres = false;
  int fold_number = 0;  // fibre size when constant, else 0
  std::vector<int> fibre_of;
  // Covering-transformation group; filled by derived_graph (where it is the
  // voltage group acting on fibres), absent for externally supplied maps.
  std::optional<PermGroup> ct_group;
  std::string failure;  // first violated local condition, empty when none
};

struct DerivedGraph {
  Graph cover;
  std::vector<int> projection;  // cover vertex -> base vertex
  PermGroup ct;                 // acts on fibres, isomorphic to K
  ProjectionReport report;
};

// Regular cover from a voltage assignment: vertex (u,g) at index
// u*|K| + index(g); each base edge {u,v} (u < v, voltage xi, identity on tree
// edges) lifts to the |K| edges {(u,g),(v,xi*g)}. The CT group acts by right
// translation on the K-coordinate.
DerivedGraph derived_graph(const VoltageAssignment& va);

struct QuotientResult {
  Graph quotient;             // simple graph on the N-orbits
  std::vector<int> orbit_of;  // g-vertex -> quotient vertex
  // No two neighbors of any vertex share an orbit; equivalent to the
  // projection being a covering onto the quotient (valency preserved).
  bool locally_injective = false;
  // Edge-orbit classes collapsed into a single quotient edge, maximized over
  // quotient edges. 1 exactly when the projection is locally injective.
  int max_edge_multiplicity = 0;
  bool has_loops = false;  // some orbit contains an adjacent pair
};

// Quotient by the orbits of N <= Aut(g) (generators are verified to be
// automorphisms): orbits adjacent iff they contain an adjacent pair.
QuotientResult quotient_graph(const Graph& g, const PermGroup& N);

// Local-bijectivity check of an explicit projection from g onto q. The map
// must be surjective; fold_number and fibre constancy are reported, and
// is_covering = locally bijective everywhere + constant fibres.
ProjectionReport verify_covering(const Graph& g, const Graph& q, const std::vector<int>& projection);

enum class ParityOutcome { Pass, VacuousPass, Fail };

struct ParityCheck {
  ParityOutcome outcome = ParityOutcome::VacuousPass;
  bool cover_bipartite = false;
  bool base_bipartite = false;
  int fold_number = 0;
  // When the check applies (bipartite cover of a non-bipartite base): the
  // base's odd closed walk witnessing non-bipartiteness.
  std::vector<int> odd_walk_witness;
};

// A bipartite cover of a non-bipartite base must have even fold number;
// requires report.is_covering.
ParityCheck fold_parity_check(const Graph& g, const Graph& q, const ProjectionReport& report);

// The four quotient shapes a normal subgroup N of an arc-transitive group
// can produce on a connected tetravalent graph: N transitive; two orbits
// (bipartition halves); quotient a cycle; or N semiregular with a
// tetravalent quotient covered by g.
enum class ReductionCase { TransitiveQuotient, BipartitionHalves, CycleQuotient, NormalCover };

struct ReductionReport {
  ReductionCase kind = ReductionCase::TransitiveQuotient;
  long long orbit_count = 0;   // r; cycle length in the CycleQuotient case
  int quotient_valency = -1;   // common valency of the quotient, -1 if irregular
  bool n_semiregular = false;
  QuotientResult quotient;
};

// Classifies the orbit structure of N on g. Preconditions verified: g
// connected tetravalent, A arc-transitive on g, N <= A normal (conjugation
// test on generators).
ReductionReport reduction_case(const Graph& g, const PermGroup& N, const PermGroup& A);

struct LiftReport {
  DerivedGraph derived;
  bool cover_connected = false;
  // Found: the cover is Cayley over a lifted regular subgroup.
  RegularSearchStatus cayley_status = RegularSearchStatus::Inconclusive;
  // True when the witness came from lifting the base translations fibrewise
  // (so it projects onto the base group); false when the fallback
  // regular-subgroup search produced it.
  bool lifted_construction = false;
  bool lifted_group_normal = false;  // meaningful when cayley_status == Found
  BigInt cover_aut_order = 0;
  std::vector<Permutation> lifted_generators;
};

// Checks that a connected abelian cover of a normal Cayley graph is again a
// Cayley graph: lifts each right translation across the fibres (a fibre
// shift per base vertex, propagated along the spanning tree and checked on
// cotree edges), joins them with the CT group, and verifies the result is
// regular and normal in the cover's automorphism group. Falls back to the
// generic regular-subgroup search when a translation does not lift.
LiftReport lift_consistency_check(const CayleyGraph& base, const VoltageAssignment& va);

}  // namespace symcensus
