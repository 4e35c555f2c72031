#pragma once

#include <optional>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/graph.hpp"
#include "symcensus/perm.hpp"
#include "symcensus/perm_group.hpp"

namespace symcensus {

struct SearchOptions {
  // Refinement-tree node budget; CapExceeded is thrown beyond it.
  long long max_nodes = 10'000'000;
  // When false, only the automorphism group is computed (no best-leaf
  // bookkeeping, stronger pruning).
  bool canonical = true;
};

struct SearchStats {
  long long nodes = 0;
  int max_depth = 0;
  long long generators_found = 0;
};

struct SearchResult {
  std::vector<Permutation> generators;  // generate Aut(g) respecting colors
  BigInt aut_order;
  // Present only when options.canonical: a labeling and the relabeled graph,
  // identical for every relabeling of the same input.
  std::optional<Permutation> canonical_labeling;
  std::optional<Graph> canonical_form;
  SearchStats stats;
};

// Individualization-refinement search over `g`. `colors` (one int per
// vertex, empty = uniform) prescribes an initial partition that every
// automorphism must respect and that the canonical form is relative to.
SearchResult canonical_search(const Graph& g, const std::vector<int>& colors = {},
                              const SearchOptions& options = {});

// Conveniences over canonical_search.
PermGroup aut_group(const Graph& g, const std::vector<int>& colors = {},
                    const SearchOptions& options = {});
BigInt aut_order(const Graph& g, const std::vector<int>& colors = {},
                 const SearchOptions& options = {});
Permutation canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);

// A labeling mapping a onto b (composition a -> canonical -> b), verified
// edge-by-edge before being returned; nullopt when the graphs differ.
std::optional<Permutation> isomorphism(const Graph& a, const Graph& b);

}  // namespace symcensus
