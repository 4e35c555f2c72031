#include "symcensus/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace symcensus {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Checks membership validity, duplicates, and (optionally) that the set is
// identity-free and inverse-closed. `what` names the offending set in errors.
void validate_connection(const StructuredGroup& G, const ConnectionSet& S,
                         bool forbid_identity, bool require_inverse_closed,
                         const std::string& what) {
  for (const GroupElement& s : S) {
    if (!G.is_valid(s))
      throw std::invalid_argument(what + ": element not in the group");
  }
  ConnectionSet sorted = S;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(what + ": duplicate element");
  if (forbid_identity) {
    const GroupElement e = G.identity();
    for (const GroupElement& s : S)
      if (s == e) throw std::invalid_argument(what + ": contains the identity");
  }
  if (require_inverse_closed) {
    for (const GroupElement& s : S) {
      if (!std::binary_search(sorted.begin(), sorted.end(), G.inverse(s)))
        throw std::invalid_argument(what + ": not inverse-closed");
    }
  }
}

long long checked_vertex_count(const StructuredGroup& G) {
  const long long n = G.order();
  if (n > kMaxGraphVertices)
    throw std::invalid_argument("group too large to realize as a graph");
  return n;
}

}  // namespace

std::vector<Permutation> regular_representation_generators(const StructuredGroup& G) {
  const int n = static_cast<int>(checked_vertex_count(G));
  std::vector<Permutation> gens;
  for (const GroupElement& a : G.standard_generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i)
      img[i] = static_cast<int>(G.index_of(G.multiply(G.element_at(i), a)));
    gens.emplace_back(std::move(img));
  }
  return gens;
}

PermGroup regular_representation(const StructuredGroup& G) {
  return PermGroup::from_generators(regular_representation_generators(G),
                                    static_cast<int>(checked_vertex_count(G)));
}

CayleyGraph cayley(const StructuredGroup& G, ConnectionSet S) {
  validate_connection(G, S, /*forbid_identity=*/true,
                      /*require_inverse_closed=*/true, "connection set");
  const int n = static_cast<int>(checked_vertex_count(G));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const GroupElement g = G.element_at(i);
    for (const GroupElement& s : S) {
      const int j = static_cast<int>(G.index_of(G.multiply(s, g)));
      if (i < j) edges.emplace_back(i, j);
      // i == j is impossible (s != 1); j < i is the same edge seen from the
      // other end because S is inverse-closed.
    }
  }
  CayleyGraph out{Graph::from_edges(n, edges), false, G, std::move(S)};
  out.connected = out.graph.is_connected();
  return out;
}

std::optional<int> find_epsilon(char tag, int p) {
  if (tag != 'b' && tag != 'd') return std::nullopt;
  if (!is_prime(p)) return std::nullopt;
  const long long m = (tag == 'b') ? p : static_cast<long long>(p) * p;
  for (long long e = 1; e < m; ++e)
    if ((e * e) % m == (m - 1) % m) return static_cast<int>(e);
  return std::nullopt;
}

namespace {

// Builds the group and connection set for one family tag; epsilon must have
// been validated by the caller.
CayleyGraph family_cayley(char tag, int p, int eps) {
  const long long p2 = static_cast<long long>(p) * p;
  switch (tag) {
    case 'a': {
      StructuredGroup G = make_group({{p, 6 * p}, false, {}});
      const GroupElement y = G.from_coords({0, 1});
      const GroupElement xy = G.from_coords({1, 1});
      return cayley(G, {y, G.inverse(y), xy, G.inverse(xy)});
    }
    case 'b': {
      StructuredGroup G = make_group({{p, 3 * p}, true, {+1, -1}});
      const GroupElement xz = G.from_coords({1, 0}, 1);
      const GroupElement xiz = G.from_coords({p - 1, 0}, 1);
      const GroupElement xeyz = G.from_coords({eps % p, 1}, 1);
      const GroupElement xmeyz = G.from_coords({(p - eps % p) % p, 1}, 1);
      return cayley(G, {xz, xiz, xeyz, xmeyz});
    }
    case 'c':
    case 'd': {
      if (p2 > 1000000)
        throw std::invalid_argument("family: p^2 factor too large");
      const int q = static_cast<int>(p2);
      StructuredGroup G = make_group({{q, 3}, true, {+1, -1}});
      const int e = (tag == 'c') ? 1 : eps % q;
      const GroupElement xz = G.from_coords({1, 0}, 1);
      const GroupElement xiz = G.from_coords({q - 1, 0}, 1);
      const GroupElement xeyz = G.from_coords({e, 1}, 1);
      const GroupElement xmeyz = G.from_coords({(q - e) % q, 1}, 1);
      return cayley(G, {xz, xiz, xeyz, xmeyz});
    }
    case 'e': {
      StructuredGroup G = make_group({{p, p, 3}, true, {+1, +1, -1}});
      const GroupElement xt = G.from_coords({1, 0, 0}, 1);
      const GroupElement xit = G.from_coords({p - 1, 0, 0}, 1);
      const GroupElement yzt = G.from_coords({0, 1, 1}, 1);
      const GroupElement yizt = G.from_coords({0, p - 1, 1}, 1);
      return cayley(G, {xt, xit, yzt, yizt});
    }
    default:
      throw std::invalid_argument("family: tag must be one of a..e");
  }
}

}  // namespace

FamilyGraph family(char tag, int p, std::optional<int> epsilon) {
  if (tag < 'a' || tag > 'e')
    throw std::invalid_argument("family: tag must be one of a..e");
  if (!is_prime(p)) throw std::invalid_argument("family: p must be prime");

  int eps = 0;
  if (tag == 'b' || tag == 'd') {
    if (!epsilon.has_value())
      throw std::invalid_argument("family: tags b and d require epsilon");
    const long long m = (tag == 'b') ? p : static_cast<long long>(p) * p;
    const long long e = *epsilon;
    if (e < 1 || e >= m)
      throw std::invalid_argument("family: epsilon out of range");
    if ((e * e) % m != (m - 1) % m)
      throw std::invalid_argument("family: epsilon^2 != -1 for this modulus");
    if (tag == 'b' && p % 4 != 1)
      throw std::invalid_argument("family: tag b requires p = 1 mod 4");
    eps = static_cast<int>(e);
  } else if (epsilon.has_value()) {
    throw std::invalid_argument("family: epsilon only applies to tags b and d");
  }
  if (tag == 'e' && p == 2)
    throw std::invalid_argument(
        "family: tag e needs p >= 3 (the connection set collapses at p = 2)");

  return FamilyGraph{tag, p,
                     (tag == 'b' || tag == 'd') ? std::optional<int>(eps)
                                                : std::nullopt,
                     family_cayley(tag, p, eps)};
}

bool family_valid(char tag, int p) {
  if (tag < 'a' || tag > 'e' || !is_prime(p)) return false;
  switch (tag) {
    case 'a':
    case 'c':
      return true;
    case 'b':
      return p % 4 == 1;
    case 'd':
      return find_epsilon('d', p).has_value();
    case 'e':
      return p >= 3;
  }
  return false;
}

BiCayleyGraph bicayley(const StructuredGroup& H, const ConnectionSet& R,
                       const ConnectionSet& L, const ConnectionSet& S) {
  validate_connection(H, R, true, true, "right set");
  validate_connection(H, L, true, true, "left set");
  validate_connection(H, S, false, false, "spoke set");
  const long long half = H.order();
  if (2 * half > kMaxGraphVertices)
    throw std::invalid_argument("group too large to realize as a graph");
  const int n = static_cast<int>(half);

  std::set<std::pair<int, int>> edges;
  auto add = [&edges](int u, int v) {
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  };
  for (int i = 0; i < n; ++i) {
    const GroupElement h = H.element_at(i);
    for (const GroupElement& r : R)
      add(i, static_cast<int>(H.index_of(H.multiply(r, h))));
    for (const GroupElement& l : L)
      add(n + i, n + static_cast<int>(H.index_of(H.multiply(l, h))));
    for (const GroupElement& s : S)
      add(i, n + static_cast<int>(H.index_of(H.multiply(s, h))));
  }

  BiCayleyGraph out{
      Graph::from_edges(2 * n, {edges.begin(), edges.end()}),
      PermGroup::trivial(2 * n)};

  std::vector<Permutation> gens;
  for (const GroupElement& a : H.standard_generators()) {
    std::vector<int> img(2 * n);
    for (int i = 0; i < n; ++i) {
      const int j = static_cast<int>(H.index_of(H.multiply(H.element_at(i), a)));
      img[i] = j;
      img[n + i] = n + j;
    }
    gens.emplace_back(std::move(img));
  }
  out.h_action = PermGroup::from_generators(gens, 2 * n);
  return out;
}

Graph rose_window(int n, int a, int r) {
  if (n < 3) throw std::invalid_argument("rose window: n must be >= 3");
  if (a < 1 || a >= n || r < 1 || r >= n)
    throw std::invalid_argument("rose window: a and r must lie in [1, n-1]");
  StructuredGroup Zn = make_group({{n}, false, {}});
  ConnectionSet R{Zn.from_coords({1}), Zn.from_coords({n - 1})};
  ConnectionSet L{Zn.from_coords({r})};
  if (r != n - r) L.push_back(Zn.from_coords({n - r}));
  ConnectionSet S{Zn.from_coords({0}), Zn.from_coords({a})};
  return bicayley(Zn, R, L, S).graph;
}

Graph lex_product(const Graph& g, const Graph& h) {
  const long long n = static_cast<long long>(g.vertex_count()) * h.vertex_count();
  if (n > kMaxGraphVertices)
    throw std::invalid_argument("lexicographic product too large");
  const int nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [x, v] : g.edges())
    for (int y = 0; y < nh; ++y)
      for (int w = 0; w < nh; ++w) edges.emplace_back(x * nh + y, v * nh + w);
  for (int x = 0; x < g.vertex_count(); ++x)
    for (const auto& [y, w] : h.edges())
      edges.emplace_back(x * nh + y, x * nh + w);
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph empty_graph(int k) {
  if (k < 0) throw std::invalid_argument("empty graph: negative order");
  return Graph(k);
}

Graph complete_graph(int k) {
  if (k < 0) throw std::invalid_argument("complete graph: negative order");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(k, edges);
}

Graph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != (i ^ 1)) edges.emplace_back(i, j);
  return Graph::from_edges(6, edges);
}

Graph twin_expanded_cycle(int n) { return lex_product(cycle(n), empty_graph(2)); }

}  // namespace symcensus
