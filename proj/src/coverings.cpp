#include "symcensus/coverings.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symcensus/canonical.hpp"
#include "symcensus/dsu.hpp"

namespace symcensus {

std::vector<std::pair<int, int>> bfs_spanning_tree(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> tree;
  if (n == 0) return tree;
  std::vector<char> seen(n, 0);
  std::queue<int> work;
  seen[0] = 1;
  work.push(0);
  while (!work.empty()) {
    const int u = work.front();
    work.pop();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        tree.emplace_back(std::min(u, v), std::max(u, v));
        work.push(v);
      }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<std::pair<int, int>> cotree_edges(const Graph& g) {
  const auto tree = bfs_spanning_tree(g);
  std::vector<std::pair<int, int>> rest;
  for (const auto& e : g.edges())
    if (!std::binary_search(tree.begin(), tree.end(), e)) rest.push_back(e);
  return rest;
}

VoltageAssignment make_voltage_assignment(const Graph& base, const StructuredGroup& K,
                                          std::map<std::pair<int, int>, GroupElement> voltages) {
  if (!base.is_connected())
    throw std::invalid_argument("voltage assignment: base graph must be connected");
  if (!K.is_abelian() || K.has_involution())
    throw std::invalid_argument("voltage assignment: voltage group must be abelian");
  const auto cotree = cotree_edges(base);
  if (voltages.size() != cotree.size())
    throw std::invalid_argument("voltage assignment: expected one voltage per cotree edge (" +
                                std::to_string(cotree.size()) + " edges, got " +
                                std::to_string(voltages.size()) + ")");
  for (const auto& e : cotree) {
    auto it = voltages.find(e);
    if (it == voltages.end())
      throw std::invalid_argument("voltage assignment: missing cotree edge " +
                                  std::to_string(e.first) + " " + std::to_string(e.second));
    if (!K.is_valid(it->second))
      throw std::invalid_argument("voltage assignment: element out of range on edge " +
                                  std::to_string(e.first) + " " + std::to_string(e.second));
  }
  return VoltageAssignment{base, K, bfs_spanning_tree(base), std::move(voltages)};
}

VoltageAssignment read_voltages(std::istream& in, const Graph& base) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("voltage file: missing header");
  std::istringstream head(line);
  long long n = 0, korder = 0;
  int k = 0;
  if (!(head >> n >> korder >> k) || k < 0)
    throw std::invalid_argument("voltage file: malformed header");
  std::vector<int> orders(k);
  for (int i = 0; i < k; ++i)
    if (!(head >> orders[i])) throw std::invalid_argument("voltage file: missing factor order");
  std::string extra;
  if (head >> extra) throw std::invalid_argument("voltage file: trailing data in header");
  if (n != base.vertex_count())
    throw std::invalid_argument("voltage file: header vertex count does not match the base graph");

  StructuredGroup K = make_group({orders, false, {}});
  if (K.order() != korder)
    throw std::invalid_argument("voltage file: declared group order does not match the factors");

  std::map<std::pair<int, int>, GroupElement> voltages;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v)) throw std::invalid_argument("voltage file: malformed edge line");
    std::vector<int> coords(k);
    for (int i = 0; i < k; ++i)
      if (!(row >> coords[i])) throw std::invalid_argument("voltage file: missing voltage coordinate");
    if (row >> extra) throw std::invalid_argument("voltage file: trailing data on edge line");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("voltage file: endpoint out of range");
    for (int i = 0; i < k; ++i) {
      if (coords[i] < 0 || coords[i] >= orders[i])
        throw std::invalid_argument("voltage file: voltage coordinate out of range");
    }
    GroupElement g = K.from_coords(std::move(coords));
    if (u > v) {
      std::swap(u, v);
      g = K.inverse(g);  // stored orientation is low-to-high
    }
    if (!voltages.emplace(std::make_pair(u, v), std::move(g)).second)
      throw std::invalid_argument("voltage file: duplicate edge");
  }
  return make_voltage_assignment(base, K, std::move(voltages));
}

VoltageAssignment read_voltages_string(const std::string& text, const Graph& base) {
  std::istringstream in(text);
  return read_voltages(in, base);
}

VoltageAssignment read_voltages_file(const std::string& path, const Graph& base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open voltage file: " + path);
  return read_voltages(in, base);
}

std::string write_voltages(const VoltageAssignment& va) {
  std::ostringstream out;
  out << va.base.vertex_count() << ' ' << va.K.order() << ' ' << va.K.factor_count();
  for (int o : va.K.spec().cyclic_orders) out << ' ' << o;
  out << '\n';
  for (const auto& [e, g] : va.voltages) {
    out << e.first << ' ' << e.second;
    for (int c : g.coords) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

DerivedGraph derived_graph(const VoltageAssignment& va) {
  const int n = va.base.vertex_count();
  const long long kk = va.K.order();
  if ((long long)n * kk > kMaxGraphVertices)
    throw std::invalid_argument("derived graph would exceed the vertex ceiling");
  const int total = (int)(n * kk);

  std::vector<std::pair<int, int>> edges;
  edges.reserve((std::size_t)va.base.edge_count() * kk);
  const GroupElement id = va.K.identity();
  for (const auto& e : va.base.edges()) {
    auto it = va.voltages.find(e);
    const GroupElement& xi = it == va.voltages.end() ? id : it->second;
    for (long long gi = 0; gi < kk; ++gi) {
      const long long hi = va.K.index_of(va.K.multiply(xi, va.K.element_at(gi)));
      edges.emplace_back((int)(e.first * kk + gi), (int)(e.second * kk + hi));
    }
  }

  DerivedGraph out{Graph::from_edges(total, edges),
                   std::vector<int>(total),
                   PermGroup::trivial(total),
                   {}};
  for (int x = 0; x < total; ++x) out.projection[x] = (int)(x / kk);

  std::vector<Permutation> ct_gens;
  for (const auto& k : va.K.standard_generators()) {
    std::vector<int> img(total);
    for (int u = 0; u < n; ++u)
      for (long long gi = 0; gi < kk; ++gi)
        img[u * kk + gi] =
            (int)(u * kk + va.K.index_of(va.K.multiply(va.K.element_at(gi), k)));
    ct_gens.emplace_back(std::move(img));
  }
  out.ct = PermGroup::from_generators(ct_gens, total);

  out.report = verify_covering(out.cover, va.base, out.projection);
  out.report.ct_group = out.ct;
  if (!out.report.is_covering || out.report.fold_number != kk)
    throw std::logic_error("derived graph failed its own covering verification");
  if (out.ct.order() != (long)kk || !out.ct.is_semiregular())
    throw std::logic_error("derived graph CT group is not a semiregular copy of K");
  return out;
}

QuotientResult quotient_graph(const Graph& g, const PermGroup& N) {
  const int n = g.vertex_count();
  if (N.degree() != n)
    throw std::invalid_argument("quotient_graph: group degree does not match vertex count");
  for (const auto& gen : N.generators())
    if (!preserves_adjacency(g, gen))
      throw std::invalid_argument("quotient_graph: a generator is not an automorphism");

  QuotientResult out;
  const auto orbits = orbit_partition(N.generators(), n);
  out.orbit_of.assign(n, -1);
  for (int b = 0; b < (int)orbits.size(); ++b)
    for (int v : orbits[b]) out.orbit_of[v] = b;

  const auto edges = g.edges();
  const int m = (int)edges.size();
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < m; ++i) edge_index[edges[i]] = i;
  DisjointSets edge_sets(m);
  for (const auto& gen : N.generators())
    for (int i = 0; i < m; ++i) {
      int iu = gen(edges[i].first), iv = gen(edges[i].second);
      if (iu > iv) std::swap(iu, iv);
      edge_sets.unite(i, edge_index.at({iu, iv}));
    }

  // One quotient edge per pair of orbits; its multiplicity is the number of
  // distinct edge orbits collapsing onto it.
  std::map<std::pair<int, int>, int> multiplicity;
  for (int i = 0; i < m; ++i) {
    if (edge_sets.find(i) != i) continue;
    int bu = out.orbit_of[edges[i].first], bv = out.orbit_of[edges[i].second];
    if (bu == bv) {
      out.has_loops = true;
      continue;
    }
    if (bu > bv) std::swap(bu, bv);
    ++multiplicity[{bu, bv}];
  }
  std::vector<std::pair<int, int>> qedges;
  for (const auto& [e, mult] : multiplicity) {
    qedges.push_back(e);
    out.max_edge_multiplicity = std::max(out.max_edge_multiplicity, mult);
  }
  out.quotient = Graph::from_edges((int)orbits.size(), qedges);

  out.locally_injective = true;
  for (int u = 0; u < n && out.locally_injective; ++u) {
    std::vector<int> hit;
    hit.push_back(out.orbit_of[u]);  // a neighbor in u's own orbit collapses the edge
    for (int v : g.neighbors(u)) hit.push_back(out.orbit_of[v]);
    std::sort(hit.begin(), hit.end());
    out.locally_injective = std::adjacent_find(hit.begin(), hit.end()) == hit.end();
  }
  return out;
}

ProjectionReport verify_covering(const Graph& g, const Graph& q,
                                 const std::vector<int>& projection) {
  const int n = g.vertex_count();
  const int nq = q.vertex_count();
  if ((int)projection.size() != n)
    throw std::invalid_argument("verify_covering: projection size does not match the cover");
  ProjectionReport rep;
  rep.fibre_of = projection;

  std::vector<int> fibre_size(nq, 0);
  for (int x = 0; x < n; ++x) {
    if (projection[x] < 0 || projection[x] >= nq)
      throw std::invalid_argument("verify_covering: projection image out of range");
    ++fibre_size[projection[x]];
  }
  for (int v = 0; v < nq; ++v)
    if (fibre_size[v] == 0)
      throw std::invalid_argument("verify_covering: projection is not onto the quotient");

  rep.constant_fibres = true;
  for (int v = 0; v < nq; ++v)
    if (fibre_size[v] != fibre_size[0]) rep.constant_fibres = false;
  rep.fold_number = rep.constant_fibres ? fibre_size[0] : 0;

  rep.locally_bijective = true;
  for (int x = 0; x < n && rep.locally_bijective; ++x) {
    const int px = projection[x];
    std::vector<int> images;
    for (int y : g.neighbors(x)) {
      if (!q.adjacent(px, projection[y])) {
        rep.locally_bijective = false;
        rep.failure = "edge {" + std::to_string(x) + "," + std::to_string(y) +
                      "} does not project to an edge";
        break;
      }
      images.push_back(projection[y]);
    }
    if (!rep.locally_bijective) break;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      rep.locally_bijective = false;
      rep.failure = "two neighbors of " + std::to_string(x) + " share an image";
    } else if ((int)images.size() != q.degree(px)) {
      rep.locally_bijective = false;
      rep.failure = "neighborhood of " + std::to_string(x) +
                    " does not cover the neighborhood of its image";
    }
  }
  rep.is_covering = rep.locally_bijective && rep.constant_fibres;
  return rep;
}

ParityCheck fold_parity_check(const Graph& g, const Graph& q, const ProjectionReport& report) {
  if (!report.is_covering)
    throw std::invalid_argument("fold_parity_check: the map is not a covering");
  ParityCheck out;
  out.fold_number = report.fold_number;
  const auto bg = bipartiteness(g);
  const auto bq = bipartiteness(q);
  out.cover_bipartite = bg.bipartite;
  out.base_bipartite = bq.bipartite;
  if (bg.bipartite && !bq.bipartite) {
    out.odd_walk_witness = bq.odd_closed_walk;
    out.outcome = report.fold_number % 2 == 0 ? ParityOutcome::Pass : ParityOutcome::Fail;
  } else {
    out.outcome = ParityOutcome::VacuousPass;
  }
  return out;
}

ReductionReport reduction_case(const Graph& g, const PermGroup& N, const PermGroup& A) {
  if (!g.is_connected() || g.valency() != 4)
    throw std::invalid_argument("reduction_case: graph must be connected and tetravalent");
  if (!transitivity(g, A).arc_transitive)
    throw std::invalid_argument("reduction_case: the ambient group is not arc-transitive");
  if (N.degree() != A.degree())
    throw std::invalid_argument("reduction_case: group degrees differ");
  for (const auto& a : A.generators()) {
    const Permutation a_inv = a.inverse();
    for (const auto& ngen : N.generators())
      if (!N.contains(a_inv.then(ngen).then(a)))
        throw std::invalid_argument("reduction_case: N is not normal in the ambient group");
  }

  ReductionReport rep;
  rep.quotient = quotient_graph(g, N);
  rep.orbit_count = rep.quotient.quotient.vertex_count();
  rep.n_semiregular = N.is_semiregular();
  const auto qval = rep.quotient.quotient.valency();
  rep.quotient_valency = qval ? *qval : -1;

  if (rep.orbit_count == 1) {
    rep.kind = ReductionCase::TransitiveQuotient;
  } else if (rep.orbit_count == 2) {
    rep.kind = ReductionCase::BipartitionHalves;
  } else if (rep.quotient_valency == 2 && rep.quotient.quotient.is_connected()) {
    rep.kind = ReductionCase::CycleQuotient;
  } else if (rep.quotient_valency == 4 && rep.n_semiregular &&
             verify_covering(g, rep.quotient.quotient, rep.quotient.orbit_of).is_covering) {
    rep.kind = ReductionCase::NormalCover;
  } else {
    throw std::logic_error("reduction_case: quotient shape fits none of the four cases");
  }
  return rep;
}

namespace {

// Oriented voltage: the stored direction is low-to-high, the reverse arc
// carries the inverse.
GroupElement arc_voltage(const VoltageAssignment& va, int u, int v) {
  const auto key = std::make_pair(std::min(u, v), std::max(u, v));
  auto it = va.voltages.find(key);
  GroupElement xi = it == va.voltages.end() ? va.K.identity() : it->second;
  return u < v ? xi : va.K.inverse(xi);
}

// Fibrewise lift of a base automorphism r: (u,g) -> (r(u), g*delta(u)) with
// the shifts delta propagated from vertex 0 along edges; every base arc
// (u,v) forces delta(v) = w(u,v)^-1 * w(r(u),r(v)) * delta(u). Returns the
// lift or nullopt when some non-tree arc is inconsistent.
std::optional<Permutation> lift_translation(const VoltageAssignment& va, const Permutation& r) {
  const int n = va.base.vertex_count();
  const long long kk = va.K.order();
  std::vector<std::optional<GroupElement>> delta(n);
  delta[0] = va.K.identity();
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    const int u = work.front();
    work.pop();
    for (int v : va.base.neighbors(u)) {
      const GroupElement need = va.K.multiply(
          va.K.multiply(va.K.inverse(arc_voltage(va, u, v)), arc_voltage(va, r(u), r(v))),
          *delta[u]);
      if (!delta[v]) {
        delta[v] = need;
        work.push(v);
      } else if (*delta[v] != need) {
        return std::nullopt;
      }
    }
  }

  std::vector<int> img((std::size_t)n * kk);
  for (int u = 0; u < n; ++u)
    for (long long gi = 0; gi < kk; ++gi)
      img[u * kk + gi] =
          (int)(r(u) * kk + va.K.index_of(va.K.multiply(va.K.element_at(gi), *delta[u])));
  return Permutation(std::move(img));
}

}  // namespace

LiftReport lift_consistency_check(const CayleyGraph& base, const VoltageAssignment& va) {
  if (va.base != base.graph)
    throw std::invalid_argument("lift_consistency_check: voltage base is not the given Cayley graph");
  if (!is_normal_cayley(base))
    throw std::invalid_argument("lift_consistency_check: base graph is not a normal Cayley graph");

  LiftReport rep{derived_graph(va), false, RegularSearchStatus::Inconclusive, false, false, 0, {}};
  rep.cover_connected = rep.derived.cover.is_connected();
  if (!rep.cover_connected)
    throw std::invalid_argument("lift_consistency_check: the derived graph is disconnected");

  SearchOptions opt;
  opt.canonical = false;
  const auto aut = canonical_search(rep.derived.cover, {}, opt);
  rep.cover_aut_order = aut.aut_order;

  std::vector<Permutation> lifted = rep.derived.ct.generators();
  bool all_lift = true;
  for (const auto& r : regular_representation_generators(base.group)) {
    auto lift = lift_translation(va, r);
    if (lift && preserves_adjacency(rep.derived.cover, *lift)) {
      lifted.push_back(std::move(*lift));
    } else {
      all_lift = false;
      break;
    }
  }

  const int total = rep.derived.cover.vertex_count();
  if (all_lift) {
    const PermGroup lifted_group = PermGroup::from_generators(lifted, total);
    if (lifted_group.order() == total && lifted_group.is_semiregular() &&
        lifted_group.is_transitive()) {
      rep.cayley_status = RegularSearchStatus::Found;
      rep.lifted_construction = true;
      rep.lifted_generators = std::move(lifted);
    }
  }
  if (rep.cayley_status != RegularSearchStatus::Found) {
    const PermGroup A = PermGroup::from_generators(aut.generators, total);
    auto search = find_regular_subgroup(rep.derived.cover, A);
    rep.cayley_status = search.status;
    rep.lifted_generators = std::move(search.generators);
  }

  if (rep.cayley_status == RegularSearchStatus::Found) {
    const PermGroup R = PermGroup::from_generators(rep.lifted_generators, total);
    rep.lifted_group_normal = true;
    for (const auto& gamma : aut.generators) {
      const Permutation gamma_inv = gamma.inverse();
      for (const auto& r : rep.lifted_generators)
        if (!R.contains(gamma_inv.then(r).then(gamma))) {
          rep.lifted_group_normal = false;
          break;
        }
      if (!rep.lifted_group_normal) break;
    }
  }
  return rep;
}

}  // namespace symcensus
