#include "symcensus/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "symcensus/refinement.hpp"

namespace symcensus {

namespace {

enum class Cmp { Less, Equal, Greater };

Cmp compare_traces(const RefinementTrace& a, const RefinementTrace& b) {
  if (a < b) return Cmp::Less;
  if (b < a) return Cmp::Greater;
  return Cmp::Equal;
}

// MSB-first packed adjacency matrix of the relabeled graph, row-major, so
// lexicographic word comparison agrees with entry-by-entry comparison.
std::vector<std::uint64_t> packed_matrix(const Graph& g, const Permutation& lab) {
  const int n = g.vertex_count();
  const size_t words_per_row = static_cast<size_t>((n + 63) / 64);
  std::vector<std::uint64_t> m(words_per_row * n, 0);
  auto set_bit = [&](int r, int c) {
    m[r * words_per_row + static_cast<size_t>(c) / 64] |=
        std::uint64_t{1} << (63 - c % 64);
  };
  for (const auto& [u, v] : g.edges()) {
    set_bit(lab(u), lab(v));
    set_bit(lab(v), lab(u));
  }
  return m;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Individualization-refinement search. The first leaf reached (zeta) anchors
// automorphism detection; the lexicographically greatest (trace path, leaf
// matrix) pair over all kept leaves (rho) defines the canonical labeling.
// Subtrees are discarded only when provably redundant: their trace falls
// below rho while differing from zeta's, they are automorphic images of an
// explored sibling (orbit pruning on the zeta path), or an automorphism onto
// the zeta branch makes the remaining siblings images of already-finished
// zeta-side subtrees (backjump to the deepest common ancestor with zeta).
class Search {
 public:
  Search(const Graph& g, const std::vector<int>& colors, const SearchOptions& opt)
      : g_(g), colors_(colors), opt_(opt), n_(g.vertex_count()), refiner_(g) {}

  SearchResult run() {
    OrderedPartition root =
        colors_.empty() ? OrderedPartition(n_) : OrderedPartition(n_, colors_);
    cur_traces_.push_back(refiner_.refine(root, {}));
    explore(root, 0, true, Cmp::Equal, rho_version_, 0);

    SearchResult res;
    res.generators = gens_;
    res.aut_order = gens_.empty()
                        ? BigInt(1)
                        : PermGroup::from_generators(gens_, n_).order();
    if (opt_.canonical) {
      res.canonical_labeling = rho_labeling_;
      res.canonical_form = apply_labeling(g_, rho_labeling_);
    }
    res.stats = stats_;
    res.stats.generators_found = static_cast<long long>(gens_.size());
    return res;
  }

 private:
  // Returns the depth whose candidate loop should resume; every frame deeper
  // than that unwinds immediately. Normal completion resumes the parent.
  int explore(const OrderedPartition& p, int level, bool z_eq, Cmp rcmp,
              long long rver, int prefix_depth) {
    if (++stats_.nodes > opt_.max_nodes)
      throw CapExceeded("symmetry search exceeded its node budget");
    stats_.max_depth = std::max(stats_.max_depth, level);

    if (p.is_discrete())
      return handle_leaf(p, level, z_eq, rcmp, rver, prefix_depth);

    const int ts = p.target_cell_start();
    const int tl = p.cell_length_at(ts);
    const std::vector<int> candidates(p.vertices().begin() + ts,
                                      p.vertices().begin() + ts + tl);

    const bool on_zeta_node = (prefix_depth == level);
    DisjointSets uf(0);
    size_t uf_built_for = static_cast<size_t>(-1);
    std::vector<int> processed;

    for (const int v : candidates) {
      if (on_zeta_node && have_zeta_ && !processed.empty() && !gens_.empty()) {
        if (uf_built_for != gens_.size()) {
          uf = stabilizer_orbits(level);
          uf_built_for = gens_.size();
        }
        const int rv = uf.find(v);
        bool redundant = false;
        for (const int u : processed)
          if (uf.find(u) == rv) {
            redundant = true;
            break;
          }
        if (redundant) continue;
      }
      processed.push_back(v);

      OrderedPartition q = p;
      const int s = q.individualize(v);
      RefinementTrace tr = refiner_.refine(q, {s});

      const bool cz =
          !have_zeta_ ||
          (z_eq && level + 1 < static_cast<int>(zeta_traces_.size()) &&
           tr == zeta_traces_[level + 1]);

      Cmp crc = Cmp::Equal;
      long long cver = rho_version_;
      if (opt_.canonical && have_rho_) {
        if (rver != rho_version_) {
          rcmp = Cmp::Equal;  // the current rho was installed inside this subtree
          rver = rho_version_;
        }
        if (rcmp != Cmp::Equal)
          crc = rcmp;
        else if (level + 1 >= static_cast<int>(rho_traces_.size()))
          crc = Cmp::Less;  // unreachable: an equal non-leaf trace cannot end rho's path
        else
          crc = compare_traces(tr, rho_traces_[level + 1]);
        cver = rho_version_;
      }

      if (opt_.canonical) {
        if (!cz && crc == Cmp::Less) continue;
      } else {
        if (!cz) continue;
      }

      const int child_prefix =
          (prefix_depth == level &&
           (!have_zeta_ || (level < static_cast<int>(zeta_base_.size()) &&
                            v == zeta_base_[level])))
              ? level + 1
              : prefix_depth;

      cur_base_.push_back(v);
      cur_traces_.push_back(std::move(tr));
      const int jump = explore(q, level + 1, cz, crc, cver, child_prefix);
      cur_traces_.pop_back();
      cur_base_.pop_back();
      if (jump < level) return jump;
    }
    return level - 1;
  }

  int handle_leaf(const OrderedPartition& p, int level, bool z_eq, Cmp rcmp,
                  long long rver, int prefix_depth) {
    Permutation lab = p.to_labeling();
    std::vector<std::uint64_t> mat = packed_matrix(g_, lab);

    if (!have_zeta_) {
      have_zeta_ = true;
      zeta_traces_ = cur_traces_;
      zeta_base_ = cur_base_;
      zeta_labeling_ = lab;
      zeta_matrix_ = mat;
      if (opt_.canonical) {
        have_rho_ = true;
        rho_traces_ = cur_traces_;
        rho_labeling_ = std::move(lab);
        rho_matrix_ = std::move(mat);
      }
      return level - 1;
    }

    if (z_eq && mat == zeta_matrix_) {
      record_generator(lab.then(zeta_labeling_.inverse()));
      return prefix_depth;
    }

    if (opt_.canonical) {
      if (rver != rho_version_) rcmp = Cmp::Equal;
      if (rcmp == Cmp::Greater) {
        replace_rho(lab, mat);
      } else if (rcmp == Cmp::Equal) {
        if (mat > rho_matrix_)
          replace_rho(lab, mat);
        else if (mat == rho_matrix_)
          record_generator(lab.then(rho_labeling_.inverse()));
      }
    }
    return level - 1;
  }

  void replace_rho(const Permutation& lab, const std::vector<std::uint64_t>& mat) {
    rho_traces_ = cur_traces_;
    rho_labeling_ = lab;
    rho_matrix_ = mat;
    ++rho_version_;
  }

  void record_generator(Permutation gamma) {
    if (!gamma.is_identity()) gens_.push_back(std::move(gamma));
  }

  // Orbits of the subgroup generated by the found automorphisms that fix the
  // first `level` zeta base points; only those may be used to rule out
  // sibling candidates at a zeta-path node of that depth.
  DisjointSets stabilizer_orbits(int level) const {
    DisjointSets uf(n_);
    for (const Permutation& g : gens_) {
      bool fixes = true;
      for (int j = 0; j < level && fixes; ++j)
        fixes = (g(zeta_base_[j]) == zeta_base_[j]);
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, g(x));
    }
    return uf;
  }

  const Graph& g_;
  const std::vector<int>& colors_;
  const SearchOptions& opt_;
  const int n_;
  Refiner refiner_;

  bool have_zeta_ = false;
  std::vector<RefinementTrace> zeta_traces_;
  std::vector<int> zeta_base_;
  Permutation zeta_labeling_{0};
  std::vector<std::uint64_t> zeta_matrix_;

  bool have_rho_ = false;
  std::vector<RefinementTrace> rho_traces_;
  Permutation rho_labeling_{0};
  std::vector<std::uint64_t> rho_matrix_;
  long long rho_version_ = 0;

  std::vector<Permutation> gens_;
  std::vector<RefinementTrace> cur_traces_;
  std::vector<int> cur_base_;
  SearchStats stats_;
};

}  // namespace

SearchResult canonical_search(const Graph& g, const std::vector<int>& colors,
                              const SearchOptions& options) {
  if (!colors.empty() &&
      static_cast<int>(colors.size()) != g.vertex_count())
    throw std::invalid_argument("canonical_search: one color per vertex");
  return Search(g, colors, options).run();
}

PermGroup aut_group(const Graph& g, const std::vector<int>& colors,
                    const SearchOptions& options) {
  SearchOptions o = options;
  o.canonical = false;
  SearchResult r = canonical_search(g, colors, o);
  return r.generators.empty()
             ? PermGroup::trivial(g.vertex_count())
             : PermGroup::from_generators(r.generators, g.vertex_count());
}

BigInt aut_order(const Graph& g, const std::vector<int>& colors,
                 const SearchOptions& options) {
  SearchOptions o = options;
  o.canonical = false;
  return canonical_search(g, colors, o).aut_order;
}

Permutation canonical_labeling(const Graph& g) {
  return *canonical_search(g).canonical_labeling;
}

Graph canonical_form(const Graph& g) {
  return *canonical_search(g).canonical_form;
}

std::optional<Permutation> isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const SearchResult ra = canonical_search(a);
  const SearchResult rb = canonical_search(b);
  if (ra.canonical_form->edges() != rb.canonical_form->edges())
    return std::nullopt;
  Permutation w = ra.canonical_labeling->then(rb.canonical_labeling->inverse());
  // Edge counts already agree, so edgewise preservation makes w a witness.
  for (const auto& [u, v] : a.edges())
    if (!b.adjacent(w(u), w(v))) return std::nullopt;
  return w;
}

}  // namespace symcensus
