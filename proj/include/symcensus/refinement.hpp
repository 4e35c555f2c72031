#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symcensus/graph.hpp"
#include "symcensus/perm.hpp"

namespace symcensus {

// Ordered partition of {0..n-1}: a sequence of disjoint nonempty cells whose
// order matters. Stored flat: verts_ lists the vertices cell by cell, pos_
// inverts it, cbeg_[i] is the start position of the cell containing position
// i, and clen_[s] is the cell length (meaningful only at start positions).
class OrderedPartition {
 public:
  // Unit partition: one cell holding every vertex (n = 0 gives no cells).
  explicit OrderedPartition(int n);
  // Cells grouped by color value, ascending; colors are arbitrary ints.
  OrderedPartition(int n, const std::vector<int>& colors);

  int degree() const { return static_cast<int>(verts_.size()); }
  int cell_count() const { return ncells_; }
  bool is_discrete() const { return ncells_ == degree(); }

  const std::vector<int>& vertices() const { return verts_; }
  int position_of(int v) const { return pos_[v]; }
  int cell_start_of(int v) const { return cbeg_[pos_[v]]; }
  int cell_length_at(int start) const { return clen_[start]; }

  // (start, length) for each cell, in partition order.
  std::vector<std::pair<int, int>> cells() const;

  // Start of the first cell of smallest length > 1; -1 when discrete. This
  // choice depends only on the cell structure, so it commutes with
  // relabeling.
  int target_cell_start() const;

  // Only meaningful when discrete: the labeling sending verts_[i] to i.
  Permutation to_labeling() const;

  // Moves v to the front of its cell and splits it off as a singleton;
  // returns the singleton's start position. v's cell must not already be a
  // singleton.
  int individualize(int v);

 private:
  friend class Refiner;
  std::vector<int> verts_, pos_, cbeg_, clen_;
  int ncells_ = 0;
};

// Label-invariant record of one refinement run: for every cell that split we
// append (cell start, fragment count) and then (neighbor count, length) per
// fragment; a terminator and the final cell count close the record. Two
// isomorphic configurations produce identical traces, so traces can be
// compared across branches of a search tree.
using RefinementTrace = std::vector<std::uint64_t>;

// One-dimensional Weisfeiler-Leman refinement against a fixed graph.
class Refiner {
 public:
  explicit Refiner(const Graph& g);

  // Refines p until it is equitable (every cell has constant neighbor count
  // into every other cell). `active` seeds the splitter queue with cell
  // start positions; an empty list means all current cells. Follows the
  // replace-rule queue discipline: when a queued cell splits, all fragments
  // are queued; when an unqueued cell splits, all but one largest fragment
  // are queued.
  RefinementTrace refine(OrderedPartition& p, std::vector<int> active);

  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  // Scratch reused across calls; sized to the graph's vertex count.
  std::vector<int> cnt_, touched_order_;
  std::vector<char> cell_touched_;
};

}  // namespace symcensus
