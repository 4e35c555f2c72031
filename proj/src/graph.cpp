#include "symcensus/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace symcensus {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loop");
  auto insert_sorted = [](std::vector<int>& a, int x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it != a.end() && *it == x)
      throw std::invalid_argument("add_edge: duplicate edge");
    a.insert(it, x);
  };
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++m_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::optional<int> Graph::valency() const {
  if (n_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  return cnt == n_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

BipartitenessResult bipartiteness(const Graph& g) {
  int n = g.vertex_count();
  BipartitenessResult r;
  r.coloring.assign(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (r.coloring[root] != -1) continue;
    r.coloring[root] = 0;
    std::vector<int> queue = {root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : g.neighbors(v)) {
        if (r.coloring[u] == -1) {
          r.coloring[u] = 1 - r.coloring[v];
          parent[u] = v;
          queue.push_back(u);
        } else if (r.coloring[u] == r.coloring[v]) {
          // Odd closed walk: path(root..v) + edge (v,u) + path(u..root).
          auto path_to_root = [&](int x) {
            std::vector<int> p;
            for (; x != -1; x = parent[x]) p.push_back(x);
            return p;  // x .. root
          };
          std::vector<int> pv = path_to_root(v);   // v .. root
          std::vector<int> pu = path_to_root(u);   // u .. root
          std::reverse(pv.begin(), pv.end());      // root .. v
          r.odd_closed_walk = pv;
          r.odd_closed_walk.insert(r.odd_closed_walk.end(), pu.begin(), pu.end());
          r.bipartite = false;
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  return r;
}

bool is_valid_s_arc(const Graph& g, const SArc& arc) {
  if (arc.empty()) return false;
  int n = g.vertex_count();
  for (int v : arc)
    if (v < 0 || v >= n) return false;
  for (size_t i = 0; i + 1 < arc.size(); ++i)
    if (!g.adjacent(arc[i], arc[i + 1])) return false;
  for (size_t i = 0; i + 2 < arc.size(); ++i)
    if (arc[i] == arc[i + 2]) return false;
  return true;
}

BigInt count_s_arcs(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("count_s_arcs: negative s");
  auto d = g.valency();
  if (!d) throw std::invalid_argument("count_s_arcs: graph must be regular");
  if (s == 0) return BigInt(g.vertex_count());
  if (*d < 2) throw std::invalid_argument("count_s_arcs: valency must be >= 2");
  BigInt total = BigInt(g.vertex_count()) * (*d);
  for (int i = 1; i < s; ++i) total *= (*d - 1);
  return total;
}

std::vector<SArc> enumerate_s_arcs(const Graph& g, int s, std::size_t cap) {
  if (s < 0) throw std::invalid_argument("enumerate_s_arcs: negative s");
  std::vector<SArc> out;
  // Iterative depth-first extension; branch state is the per-level neighbor
  // index, so no recursion regardless of s.
  std::vector<int> arc(s + 1);
  std::vector<size_t> choice(s + 1, 0);
  for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
    arc[0] = v0;
    int depth = 0;
    choice[1] = 0;
    if (s == 0) {
      out.push_back({v0});
      continue;
    }
    while (depth >= 0) {
      if (depth + 1 > s) {
        if (out.size() >= cap) throw CapExceeded("enumerate_s_arcs: cap exceeded");
        out.push_back(arc);
        --depth;
        continue;
      }
      int v = arc[depth];
      const auto& nb = g.neighbors(v);
      bool extended = false;
      for (size_t& i = choice[depth + 1]; i < nb.size();) {
        int u = nb[i++];
        if (depth >= 1 && u == arc[depth - 1]) continue;  // no backtracking
        arc[depth + 1] = u;
        ++depth;
        if (depth + 1 <= s) choice[depth + 1] = 0;
        extended = true;
        break;
      }
      if (!extended) {
        choice[depth + 1] = 0;
        --depth;
      }
    }
  }
  return out;
}

std::optional<SArc> smallest_s_arc(const Graph& g, int s) {
  // Greedy lexicographic extension with backtracking.
  for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
    SArc arc = {v0};
    std::vector<size_t> choice = {0};
    while (true) {
      if (static_cast<int>(arc.size()) == s + 1) return arc;
      const auto& nb = g.neighbors(arc.back());
      bool extended = false;
      for (size_t& i = choice.back(); i < nb.size();) {
        int u = nb[i++];
        if (arc.size() >= 2 && u == arc[arc.size() - 2]) continue;
        arc.push_back(u);
        choice.push_back(0);
        extended = true;
        break;
      }
      if (!extended) {
        arc.pop_back();
        choice.pop_back();
        if (arc.empty()) break;
      }
    }
  }
  return std::nullopt;
}

Graph apply_labeling(const Graph& g, const Permutation& labeling) {
  if (labeling.degree() != g.vertex_count())
    throw std::invalid_argument("apply_labeling: degree mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(labeling(u), labeling(v));
  return Graph::from_edges(g.vertex_count(), edges);
}

bool preserves_adjacency(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

namespace {

bool parse_nonneg(const std::string& tok, long long& out) {
  if (tok.empty() || tok.size() > 18) return false;
  out = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw GraphIoError(GraphIoError::Kind::BadHeader, "read_graph: missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream hs(line);
  std::string t1, t2, extra;
  long long n = 0, m = 0;
  if (!(hs >> t1 >> t2) || (hs >> extra) || !parse_nonneg(t1, n) || !parse_nonneg(t2, m))
    throw GraphIoError(GraphIoError::Kind::BadHeader, "read_graph: malformed header, expected 'n m'");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw GraphIoError(GraphIoError::Kind::EdgeCountMismatch,
                         "read_graph: fewer edge lines than declared");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> t1 >> t2) || (es >> extra) || !parse_nonneg(t1, u) || !parse_nonneg(t2, v))
      throw GraphIoError(GraphIoError::Kind::BadEdgeLine, "read_graph: malformed edge line");
    if (u >= n || v >= n)
      throw GraphIoError(GraphIoError::Kind::VertexOutOfRange, "read_graph: vertex out of range");
    if (u == v) throw GraphIoError(GraphIoError::Kind::Loop, "read_graph: loop edge");
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const std::invalid_argument&) {
      throw GraphIoError(GraphIoError::Kind::DuplicateEdge, "read_graph: duplicate edge");
    }
  }
  return g;
}

Graph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("read_graph_file: cannot open " + path);
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("write_graph_file: cannot open " + path);
  out << write_graph(g);
}

}  // namespace symcensus
