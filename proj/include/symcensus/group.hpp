#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symcensus {

// Element of a StructuredGroup: one residue per cyclic factor plus a flip bit
// that is always 0 in groups without the involution extension.
struct GroupElement {
  std::vector<int> coords;
  int flip = 0;

  bool operator==(const GroupElement& o) const {
    return flip == o.flip && coords == o.coords;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const {  // lexicographic, flip last
    if (coords != o.coords) return coords < o.coords;
    return flip < o.flip;
  }
};

struct StructuredGroupSpec {
  std::vector<int> cyclic_orders;
  bool has_involution = false;
  // One sign per cyclic factor; -1 means the involution inverts that factor.
  // Ignored (treated as all +1) when has_involution is false.
  std::vector<int> action_signs;
};

// Direct product of cyclic groups Z_{n1} x ... x Z_{nk}, optionally extended
// by an involution z acting coordinatewise by the given signs:
//   (u, e) * (v, f) = (u + s^e(v), e + f mod 2),  s^e = signwise action e times.
// Elements are enumerated in a fixed order: lexicographic on coords, flip
// last, which also defines the mixed-radix element index.
class StructuredGroup {
 public:
  explicit StructuredGroup(StructuredGroupSpec spec);

  const StructuredGroupSpec& spec() const { return spec_; }
  int factor_count() const { return static_cast<int>(spec_.cyclic_orders.size()); }
  bool has_involution() const { return spec_.has_involution; }
  long long order() const { return order_; }
  bool is_abelian() const { return abelian_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement from_coords(std::vector<int> coords, int flip = 0) const;

  long long index_of(const GroupElement& a) const;
  GroupElement element_at(long long index) const;

  int element_order(const GroupElement& a) const;
  bool is_valid(const GroupElement& a) const;

  std::string to_string(const GroupElement& a) const;

  // One unit per cyclic factor of order > 1, plus the involution when
  // present; together they generate the group.
  std::vector<GroupElement> standard_generators() const;

 private:
  void check(const GroupElement& a) const;
  StructuredGroupSpec spec_;
  long long order_ = 1;
  bool abelian_ = true;
};

// Validates the spec and builds the group handle. Rejects zero factor orders
// and a -1 action sign when no involution is declared; signs on factors of
// order <= 2 are normalized to +1 (inversion is trivial there).
StructuredGroup make_group(StructuredGroupSpec spec);

}  // namespace symcensus
