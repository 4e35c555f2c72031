#include "symcensus/symmetry.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "symcensus/dsu.hpp"

namespace symcensus {
namespace {

constexpr long kSArcOrbitCap = 10'000'000;

void require_automorphisms(const Graph& g, const PermGroup& A, const char* where) {
  if (A.degree() != g.vertex_count())
    throw std::invalid_argument(std::string(where) + ": group degree does not match vertex count");
  for (const auto& gen : A.generators())
    if (!preserves_adjacency(g, gen))
      throw std::invalid_argument(std::string(where) + ": a generator is not an automorphism");
}

// All cycle lengths of p equal and >= 2; the shared length is the element
// order, a necessary condition for membership in a semiregular group.
bool uniform_fixed_point_free_cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  int len0 = -1;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int len = 0, x = v;
    do {
      seen[x] = 1;
      x = p(x);
      ++len;
    } while (x != v);
    if (len < 2) return false;
    if (len0 == -1)
      len0 = len;
    else if (len != len0)
      return false;
  }
  return true;
}

}  // namespace

TransitivityReport transitivity(const Graph& g, const PermGroup& A) {
  require_automorphisms(g, A, "transitivity");
  const int n = g.vertex_count();
  TransitivityReport rep;

  rep.vertex_orbits = (long long)orbit_partition(A.generators(), n).size();
  rep.vertex_transitive = rep.vertex_orbits <= 1;

  const auto edges = g.edges();
  const int m = (int)edges.size();
  std::unordered_map<long long, int> edge_index;
  edge_index.reserve(2 * (std::size_t)m);
  for (int i = 0; i < m; ++i)
    edge_index[(long long)edges[i].first * n + edges[i].second] = i;
  auto edge_id = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return edge_index.at((long long)u * n + v);
  };

  DisjointSets edge_sets(m);
  DisjointSets arc_sets(2 * m);
  // Arc 2e + 0 points low-to-high along edge e, 2e + 1 the reverse.
  auto arc_id = [&](int u, int v) {
    const int e = edge_id(u, v);
    return 2 * e + (u < v ? 0 : 1);
  };
  for (const auto& gen : A.generators()) {
    for (int i = 0; i < m; ++i) {
      const int iu = gen(edges[i].first);
      const int iv = gen(edges[i].second);
      edge_sets.unite(i, edge_id(iu, iv));
      arc_sets.unite(2 * i, arc_id(iu, iv));
      arc_sets.unite(2 * i + 1, arc_id(iv, iu));
    }
  }
  rep.edge_orbits = edge_sets.class_count();
  rep.arc_orbits = arc_sets.class_count();
  rep.edge_transitive = rep.edge_orbits <= 1;
  rep.arc_transitive = rep.arc_orbits <= 1;
  return rep;
}

namespace {

// Size of the orbit of the lexicographically smallest s-arc under gens,
// grown breadth-first; stops early once the orbit exceeds `total`.
long long s_arc_orbit_size(const Graph& g, const std::vector<Permutation>& gens, int s,
                           long long total) {
  auto base = smallest_s_arc(g, s);
  if (!base) return 0;
  std::set<SArc> seen;
  seen.insert(*base);
  std::queue<SArc> work;
  work.push(*base);
  SArc image((std::size_t)s + 1);
  while (!work.empty()) {
    SArc arc = work.front();
    work.pop();
    for (const auto& gen : gens) {
      for (int i = 0; i <= s; ++i) image[i] = gen(arc[i]);
      if (seen.insert(image).second) {
        if ((long long)seen.size() > total) return (long long)seen.size();
        work.push(image);
      }
    }
  }
  return (long long)seen.size();
}

void validate_tetravalent_stabilizer(SLevelReport& rep) {
  const auto& st = rep.stabilizer_order;
  bool ok = true;
  std::ostringstream note;
  switch (rep.s) {
    case 1:
      ok = is_power_of_two(st);
      if (!ok) note << "1-transitive tetravalent graph whose vertex stabilizer (order "
                    << to_decimal(st) << ") is not a 2-group";
      break;
    case 2:
      ok = st == 12 || st == 24;
      break;
    case 3:
      ok = st == 36 || st == 72 || st == 144;
      break;
    case 4:
      ok = st == 432;
      break;
    case 7:
      ok = st == 11664;
      break;
    default:
      ok = false;
      note << "tetravalent graph claims " << rep.s
           << "-transitivity; only 1,2,3,4,7 are possible";
      break;
  }
  if (!ok && note.str().empty())
    note << "vertex stabilizer order " << to_decimal(st) << " is impossible for a "
         << rep.s << "-transitive tetravalent graph";
  rep.stabilizer_consistent = ok;
  rep.stabilizer_note = note.str();
}

}  // namespace

SLevelReport s_level(const Graph& g, const SearchResult& aut) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("s_level: empty graph");
  const auto d = g.valency();
  if (!d) throw std::invalid_argument("s_level: graph is not regular");
  if (*d < 3)
    throw std::invalid_argument("s_level: valency below 3 (transitivity level would be unbounded)");
  if (!g.is_connected()) throw std::invalid_argument("s_level: graph is not connected");

  SLevelReport rep;
  rep.aut_order = aut.aut_order;
  rep.vertex_transitive = orbit_partition(aut.generators, n).size() <= 1;
  if (rep.vertex_transitive) rep.stabilizer_order = rep.aut_order / n;

  for (int s = 1;; ++s) {
    const BigInt total_big = count_s_arcs(g, s);
    if (total_big > kSArcOrbitCap)
      throw CapExceeded("s_level: more than 10^7 " + std::to_string(s) + "-arcs");
    const long long total = (long long)total_big.get_si();
    if (s_arc_orbit_size(g, aut.generators, s, total) != total) break;
    rep.s = s;
    rep.arc_transitive = true;
    if (s > 16)
      throw std::logic_error("s_level: transitivity level exceeds 16 on a valency >= 3 graph");
  }

  if (rep.arc_transitive && *d == 4) validate_tetravalent_stabilizer(rep);
  return rep;
}

SLevelReport s_level(const Graph& g) {
  SearchOptions opt;
  opt.canonical = false;
  return s_level(g, canonical_search(g, {}, opt));
}

bool one_regular(const Graph& g) {
  const SLevelReport rep = s_level(g);
  const BigInt arcs = BigInt(g.vertex_count()) * *g.valency();
  return rep.arc_transitive && rep.aut_order == arcs;
}

namespace {

struct RegularSearch {
  const Graph& g;
  const RegularSearchOptions& opt;
  std::vector<int> neighbors = {};                           // of vertex 0
  std::vector<std::vector<Permutation>> candidates = {};     // per neighbor
  long long nodes = 0;
  bool budget_hit = false;

  // Extends the partial subgroup P = <gens> to cover neighbors[k..]. P stays
  // semiregular throughout; covering every neighbor forces transitivity
  // (the orbit of 0 is closed under adjacency), hence regularity.
  bool extend(const PermGroup& P, std::vector<Permutation> gens, std::size_t k,
              std::vector<Permutation>& out) {
    if (++nodes > opt.node_cap) {
      budget_hit = true;
      return false;
    }
    if (k == neighbors.size()) {
      if (!P.is_transitive() || P.order() != g.vertex_count())
        throw std::logic_error("regular subgroup search reached an invalid leaf");
      out = std::move(gens);
      return true;
    }
    const int u = neighbors[k];
    if (auto forced = P.representative_to(u)) {
      // P already maps 0 to u; inside any regular overgroup that element is
      // the unique choice, so there is nothing to branch on.
      return extend(P, std::move(gens), k + 1, out);
    }
    for (const auto& c : candidates[k]) {
      std::vector<Permutation> next = gens;
      next.push_back(c);
      PermGroup P2 = PermGroup::from_generators(next, g.vertex_count(), {0});
      if (P2.order() > g.vertex_count()) continue;
      if (!P2.is_semiregular()) continue;
      if (extend(P2, std::move(next), k + 1, out)) return true;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

RegularSubgroupResult find_regular_subgroup(const Graph& g, const PermGroup& A,
                                            const RegularSearchOptions& options) {
  require_automorphisms(g, A, "find_regular_subgroup");
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("find_regular_subgroup: empty graph");
  if (!g.is_connected())
    throw std::invalid_argument("find_regular_subgroup: graph must be connected");

  RegularSubgroupResult res;
  if (n == 1) {
    res.status = RegularSearchStatus::Found;
    return res;
  }

  // Rebase so that representative_to and the stabilizer refer to vertex 0.
  const PermGroup Ab = PermGroup::from_generators(A.generators(), n, {0});
  if (!Ab.is_transitive()) {
    res.status = RegularSearchStatus::NoneExists;
    res.note = "the supplied group is intransitive";
    return res;
  }
  const BigInt stab = Ab.point_stabilizer_order(0);
  if (stab > (long)options.stabilizer_cap) {
    res.status = RegularSearchStatus::Inconclusive;
    res.note = "vertex stabilizer order " + to_decimal(stab) + " exceeds the cap of " +
               std::to_string(options.stabilizer_cap);
    return res;
  }

  const auto stab_elems =
      Ab.elements_fixing_base_prefix(1, (std::size_t)options.stabilizer_cap + 1);

  RegularSearch search{g, options};
  search.neighbors = g.neighbors(0);
  for (int u : search.neighbors) {
    const auto rep = Ab.representative_to(u);
    if (!rep) throw std::logic_error("transitive group missing a transversal element");
    std::vector<Permutation> cand;
    for (const auto& s : stab_elems) {
      Permutation c = s.then(*rep);
      if (uniform_fixed_point_free_cycles(c)) cand.push_back(std::move(c));
    }
    if (cand.empty()) {
      res.status = RegularSearchStatus::NoneExists;
      res.note = "no semiregular-compatible element maps 0 to its neighbor " + std::to_string(u);
      return res;
    }
    search.candidates.push_back(std::move(cand));
  }

  std::vector<Permutation> found;
  if (search.extend(PermGroup::trivial(n), {}, 0, found)) {
    res.status = RegularSearchStatus::Found;
    res.generators = std::move(found);
    return res;
  }
  if (search.budget_hit) {
    res.status = RegularSearchStatus::Inconclusive;
    res.note = "node budget of " + std::to_string(options.node_cap) + " exhausted";
  } else {
    res.status = RegularSearchStatus::NoneExists;
    res.note = "search space exhausted";
  }
  return res;
}

ReconstructedCayley cayley_of_regular_action(const Graph& g,
                                             const std::vector<Permutation>& regular_gens) {
  const int n = g.vertex_count();
  const PermGroup R = PermGroup::from_generators(regular_gens, n, {0});
  if (R.order() != n || !R.is_transitive() || !R.is_semiregular())
    throw std::invalid_argument("cayley_of_regular_action: action is not regular");
  for (const auto& gen : regular_gens)
    if (!preserves_adjacency(g, gen))
      throw std::invalid_argument("cayley_of_regular_action: generator is not an automorphism");

  const auto elems = R.elements((std::size_t)n);
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[elems[i].images()] = i;

  // Connection set: elements moving 0 to one of its neighbors. Inverse-closed
  // because automorphisms preserve adjacency to 0.
  std::vector<int> connection;
  for (int i = 0; i < n; ++i)
    if (g.adjacent(0, elems[i](0))) connection.push_back(i);

  // Edges join r to r*s (s applied first): to_input sends this pair to
  // {r(0), r(s(0))}, adjacent because the automorphism r preserves 0 ~ s(0).
  std::set<std::pair<int, int>> edge_set;
  for (int i = 0; i < n; ++i)
    for (int s : connection) {
      const int j = index_of.at(elems[s].then(elems[i]).images());
      edge_set.insert({std::min(i, j), std::max(i, j)});
    }

  ReconstructedCayley out{
      Graph::from_edges(n, {edge_set.begin(), edge_set.end()}),
      Permutation([&] {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = elems[i](0);
        return img;
      }())};

  if (apply_labeling(out.graph, out.to_input) != g)
    throw std::logic_error("cayley_of_regular_action: reconstruction failed to match the input");
  return out;
}

bool is_normal_cayley(const CayleyGraph& cg) {
  const int n = cg.graph.vertex_count();
  if (n != (int)cg.group.order())
    throw std::invalid_argument("is_normal_cayley: graph order differs from group order");
  const auto rgens = regular_representation_generators(cg.group);
  for (const auto& r : rgens)
    if (!preserves_adjacency(cg.graph, r))
      throw std::invalid_argument(
          "is_normal_cayley: translations do not act on this graph; expected the cayley() labeling");
  const PermGroup R = PermGroup::from_generators(rgens, n);

  SearchOptions opt;
  opt.canonical = false;
  const auto aut = canonical_search(cg.graph, {}, opt);
  for (const auto& gamma : aut.generators) {
    const Permutation gamma_inv = gamma.inverse();
    for (const auto& r : rgens)
      if (!R.contains(gamma_inv.then(r).then(gamma))) return false;
  }
  return true;
}

}  // namespace symcensus
