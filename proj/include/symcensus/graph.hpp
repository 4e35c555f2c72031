#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/caps.hpp"
#include "symcensus/perm.hpp"

namespace symcensus {

// Ceiling on vertex counts accepted by graph builders; keeps all index
// arithmetic comfortably inside int.
inline constexpr long long kMaxGraphVertices = 2'000'000;

// Errors raised while parsing the text graph format; each malformation is a
// distinct kind so callers can tell them apart.
class GraphIoError : public std::invalid_argument {
 public:
  enum class Kind { BadHeader, BadEdgeLine, VertexOutOfRange, Loop, DuplicateEdge, EdgeCountMismatch };
  GraphIoError(Kind k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
  Kind kind;
};

// Simple undirected graph: per-vertex sorted, duplicate-free neighbor lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Builds from an edge list. Edges may come in either orientation but must
  // be loop-free and pairwise distinct after normalization.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  // Common degree, or nullopt when the graph is irregular.
  std::optional<int> valency() const;

  bool is_connected() const;

  // Edges {u,v} with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct BipartitenessResult {
  bool bipartite = false;
  // Bipartite witness: a proper 2-coloring.
  std::vector<int> coloring;
  // Non-bipartite witness: an odd closed walk given as a vertex sequence
  // starting and ending at the same vertex.
  std::vector<int> odd_closed_walk;
};

BipartitenessResult bipartiteness(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartiteness(g).bipartite; }

// An s-arc is a vertex sequence (v_0, ..., v_s) walking along edges with no
// immediate backtracking: v_{i-1} != v_{i+1}.
using SArc = std::vector<int>;

bool is_valid_s_arc(const Graph& g, const SArc& arc);

// Number of s-arcs of a regular graph of valency d >= 2: n * d * (d-1)^(s-1).
// s = 0 counts vertices. Requires a regular graph.
BigInt count_s_arcs(const Graph& g, int s);

// Exhaustive iterative enumeration of all s-arcs; cross-checks the closed
// formula. Throws CapExceeded beyond the cap.
std::vector<SArc> enumerate_s_arcs(const Graph& g, int s, std::size_t cap = 10'000'000);

// Lexicographically smallest s-arc, if any.
std::optional<SArc> smallest_s_arc(const Graph& g, int s);

// Relabel: vertex v of g becomes vertex labeling(v).
Graph apply_labeling(const Graph& g, const Permutation& labeling);

bool preserves_adjacency(const Graph& g, const Permutation& p);

// Text format, one graph per file:
//   line 1:  n m
//   m lines: u v   with 0 <= u < v < n, sorted lexicographically
// LF line endings, ASCII decimal, no extra whitespace. write_graph always
// emits this normal form; read_graph accepts edges in either orientation and
// rejects loops, duplicates, out-of-range endpoints and malformed lines.
Graph read_graph(std::istream& in);
Graph read_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace symcensus
