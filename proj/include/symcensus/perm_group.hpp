#pragma once

#include <optional>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/caps.hpp"
#include "symcensus/perm.hpp"

namespace symcensus {

// Permutation group with a base and strong generating set built by a
// deterministic Schreier-Sims procedure. Base points are chosen as the
// smallest point moved at each level (callers can force a base prefix).
// The order is exact and arbitrary precision.
class PermGroup {
 public:
  // Trivial group on n points.
  static PermGroup trivial(int degree);

  static PermGroup from_generators(std::vector<Permutation> gens, int degree,
                                   const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::vector<int> base() const;
  int strong_generator_count() const;

  bool contains(const Permutation& p) const;

  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int v) const;
  bool is_transitive() const;

  // True iff every nonidentity element is fixed-point-free; equivalently
  // every orbit has length equal to the group order.
  bool is_semiregular() const;

  // |G_v| = |G| / |orbit(v)| by orbit-stabilizer.
  BigInt point_stabilizer_order(int v) const;

  // Transversal element mapping base()[0] to v, if v lies in its orbit.
  std::optional<Permutation> representative_to(int v) const;

  // All elements fixing the first `fixed_levels` base points, in a fixed
  // deterministic order. Throws CapExceeded when more than cap elements.
  std::vector<Permutation> elements_fixing_base_prefix(int fixed_levels, std::size_t cap) const;
  std::vector<Permutation> elements(std::size_t cap) const {
    return elements_fixing_base_prefix(0, cap);
  }

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;  // strong generators whose sift drops out here
    std::vector<int> orbit;         // discovery order
    std::vector<int> slot;          // point -> index into trans, or -1
    std::vector<Permutation> trans;      // base_point -> orbit point
    std::vector<Permutation> trans_inv;
  };

  PermGroup() = default;
  std::vector<const Permutation*> gens_from_level(int level) const;
  void update_orbit(int level);
  std::pair<Permutation, int> sift(Permutation h, int from_level) const;
  void insert_strong_generator(Permutation h, int level);
  bool verify_level(int level, int& inserted_at);
  void build(const std::vector<int>& base_prefix);
  void enumerate(int level, int stop_level, const Permutation& suffix,
                 std::vector<Permutation>& out, std::size_t cap) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// Convenience wrapper matching the operation name.
inline PermGroup schreier_sims(std::vector<Permutation> gens, int degree) {
  return PermGroup::from_generators(std::move(gens), degree);
}

// Orbits of {0..n-1} under a list of permutations, each orbit sorted, orbits
// ordered by smallest member.
std::vector<std::vector<int>> orbit_partition(const std::vector<Permutation>& gens, int n);

}  // namespace symcensus
