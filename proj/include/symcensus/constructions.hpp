#pragma once

#include <optional>
#include <vector>

#include "symcensus/graph.hpp"
#include "symcensus/group.hpp"
#include "symcensus/perm_group.hpp"

namespace symcensus {

// Right-regular representation of a structured group: degree |G|, generated
// by right multiplication with the standard generators (one unit per cyclic
// factor of order > 1, plus the involution when present). Transitive and
// semiregular of order |G|.
PermGroup regular_representation(const StructuredGroup& G);
std::vector<Permutation> regular_representation_generators(const StructuredGroup& G);

// Connection set: identity-free, inverse-closed, duplicate-free.
using ConnectionSet = std::vector<GroupElement>;

struct CayleyGraph {
  Graph graph;
  bool connected = false;  // equivalent to <S> = G
  StructuredGroup group;
  ConnectionSet connection;
};

// Cay(G,S): vertex i is the i-th enumerated element; h ~ g iff g h^-1 in S,
// so the neighbors of g are { s*g : s in S }.
CayleyGraph cayley(const StructuredGroup& G, ConnectionSet S);

// The five tetravalent Cayley families of order 6p^2 over a prime p, indexed
// by tag 'a'..'e'. Tags b and d require epsilon with epsilon^2 = -1 modulo p
// (tag b, needs p = 1 mod 4) respectively modulo p^2 (tag d); epsilon is
// validated, never computed here (see find_epsilon).
//
// Generator words resolve to coordinates as follows (flip bit = z or t):
//   a: G = Z_p x Z_6p                 x=(1,0)    y=(0,1)
//      S = { y, y^-1, xy, (xy)^-1 }
//   b: G = (Z_p x Z_3p) : Z_2, z inverts y;  x=(1,0;0) y=(0,1;0) z=(0,0;1)
//      S = { xz, x^-1 z, x^e y z, x^-e y z }
//   c: G = (Z_p^2 x Z_3) : Z_2, z inverts y; x=(1,0;0) y=(0,1;0) z=(0,0;1)
//      S = { xz, x^-1 z, x y z, x^-1 y z }
//   d: same group as c;  S = { xz, x^-1 z, x^e y z, x^-e y z }
//   e: G = (Z_p x Z_p x Z_3) : Z_2, t inverts z;
//      x=(1,0,0;0) y=(0,1,0;0) z=(0,0,1;0) t=(0,0,0;1)
//      S = { xt, x^-1 t, y z t, y^-1 z t }
struct FamilyGraph {
  char tag = '?';
  int p = 0;
  std::optional<int> epsilon;
  CayleyGraph cay;
};

FamilyGraph family(char tag, int p, std::optional<int> epsilon = std::nullopt);

// Smallest valid epsilon for tags b/d at prime p, if the congruence is
// solvable.
std::optional<int> find_epsilon(char tag, int p);

// True when family(tag, p, ...) is constructible: p prime, the tag's
// congruence solvable, and the connection set has four distinct elements.
bool family_valid(char tag, int p);

struct BiCayleyGraph {
  Graph graph;
  // Right-multiplication action of H on both copies: semiregular with two
  // orbits (the copies).
  PermGroup h_action;
};

// BiCay(H,R,L,S) on two copies of H: vertex h0 = index(h), h1 = |H|+index(h).
//   right edges  {h0, g0} iff g h^-1 in R
//   left edges   {h1, g1} iff g h^-1 in L
//   spoke edges  {h0, g1} iff g h^-1 in S
// R and L must be identity-free and inverse-closed; S is unconstrained and
// may contain the identity.
BiCayleyGraph bicayley(const StructuredGroup& H, const ConnectionSet& R,
                       const ConnectionSet& L, const ConnectionSet& S);

// Rose window R_n(a, r) realized as BiCay(Z_n, {1,-1}, {r,-r}, {0,a}).
Graph rose_window(int n, int a, int r);

// Lexicographic product: vertex (x,y) at index x*|V(h)|+y; (x,y) ~ (v,w) iff
// x ~ v in g, or x = v and y ~ w in h.
Graph lex_product(const Graph& g, const Graph& h);

Graph cycle(int n);          // n >= 3
Graph empty_graph(int k);    // k isolated vertices
Graph complete_graph(int k);
Graph octahedron();          // K_{2,2,2}: i ~ j unless j == i^1

// C_n[2K_1]: the cycle with every vertex doubled into a non-adjacent twin
// pair; vertex (i,j) at index 2i+j, fibres {2i, 2i+1}.
Graph twin_expanded_cycle(int n);

}  // namespace symcensus
