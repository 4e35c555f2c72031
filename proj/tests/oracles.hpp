#pragma once

#include <vector>

#include "symcensus/graph.hpp"
#include "symcensus/perm.hpp"

// Reference implementations used to validate the main engine. They share no
// code with the search in src/: brute force filters all n! permutations,
// and the backtracking counter extends partial vertex maps along a BFS
// order. Results from these routines were recorded as expected constants
// before the engine existed.
namespace symcensus::oracles {

// Every automorphism of g, found by filtering all n! permutations (n <= 8).
std::vector<Permutation> brute_force_automorphisms(const Graph& g);

// Exact |Aut(g)| by backtracking; cap < 0 means unlimited, otherwise the
// search stops and returns -1 once the count would exceed cap.
long long backtracking_aut_count(const Graph& g, long long cap = -1);

// All automorphisms by the same backtracking (only sensible when the group
// is small enough to list).
std::vector<Permutation> backtracking_automorphisms(const Graph& g);

// True iff some isomorphism a -> b exists (early exit on the first one).
bool exists_isomorphism(const Graph& a, const Graph& b);

}  // namespace symcensus::oracles
