#include "symcensus/group.hpp"

#include <numeric>
#include <stdexcept>

namespace symcensus {

namespace {
constexpr long long kMaxEnumerableOrder = 100'000'000;
}

StructuredGroup::StructuredGroup(StructuredGroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.action_signs.empty())
    spec_.action_signs.assign(spec_.cyclic_orders.size(), 1);
  if (spec_.action_signs.size() != spec_.cyclic_orders.size())
    throw std::invalid_argument("make_group: action_signs length must match cyclic_orders");
  for (int n : spec_.cyclic_orders) {
    if (n <= 0) throw std::invalid_argument("make_group: cyclic factor orders must be positive");
    if (order_ > kMaxEnumerableOrder / n)
      throw std::invalid_argument("make_group: group order too large to enumerate");
    order_ *= n;
  }
  for (size_t i = 0; i < spec_.action_signs.size(); ++i) {
    int& s = spec_.action_signs[i];
    if (s != 1 && s != -1)
      throw std::invalid_argument("make_group: action signs must be +1 or -1");
    if (s == -1 && !spec_.has_involution)
      throw std::invalid_argument("make_group: action sign -1 requires an involution");
    if (spec_.cyclic_orders[i] <= 2) s = 1;  // inversion trivial on Z_1, Z_2
  }
  if (spec_.has_involution) order_ *= 2;
  abelian_ = true;
  if (spec_.has_involution)
    for (int s : spec_.action_signs)
      if (s == -1) abelian_ = false;
}

StructuredGroup make_group(StructuredGroupSpec spec) {
  return StructuredGroup(std::move(spec));
}

GroupElement StructuredGroup::identity() const {
  GroupElement e;
  e.coords.assign(spec_.cyclic_orders.size(), 0);
  return e;
}

bool StructuredGroup::is_valid(const GroupElement& a) const {
  if (a.coords.size() != spec_.cyclic_orders.size()) return false;
  for (size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] < 0 || a.coords[i] >= spec_.cyclic_orders[i]) return false;
  if (a.flip != 0 && a.flip != 1) return false;
  if (a.flip == 1 && !spec_.has_involution) return false;
  return true;
}

void StructuredGroup::check(const GroupElement& a) const {
  if (!is_valid(a)) throw std::invalid_argument("StructuredGroup: element outside the group");
}

GroupElement StructuredGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r;
  r.coords.resize(a.coords.size());
  for (size_t i = 0; i < a.coords.size(); ++i) {
    int n = spec_.cyclic_orders[i];
    int bv = b.coords[i];
    if (a.flip == 1 && spec_.action_signs[i] == -1) bv = (n - bv) % n;
    r.coords[i] = (a.coords[i] + bv) % n;
  }
  r.flip = (a.flip + b.flip) % 2;
  return r;
}

GroupElement StructuredGroup::inverse(const GroupElement& a) const {
  check(a);
  GroupElement r;
  r.coords.resize(a.coords.size());
  for (size_t i = 0; i < a.coords.size(); ++i) {
    int n = spec_.cyclic_orders[i];
    int v = (n - a.coords[i]) % n;
    // (u,e)^-1 = (-s^e(u), e): with e = 1 the signwise action applies.
    if (a.flip == 1 && spec_.action_signs[i] == -1) v = (n - v) % n;
    r.coords[i] = v;
  }
  r.flip = a.flip;
  return r;
}

GroupElement StructuredGroup::from_coords(std::vector<int> coords, int flip) const {
  if (coords.size() != spec_.cyclic_orders.size())
    throw std::invalid_argument("from_coords: wrong number of coordinates");
  GroupElement r;
  r.coords.resize(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    int n = spec_.cyclic_orders[i];
    long long v = coords[i] % n;
    if (v < 0) v += n;
    r.coords[i] = static_cast<int>(v);
  }
  r.flip = ((flip % 2) + 2) % 2;
  if (r.flip == 1 && !spec_.has_involution)
    throw std::invalid_argument("from_coords: flip set but group has no involution");
  return r;
}

long long StructuredGroup::index_of(const GroupElement& a) const {
  check(a);
  long long idx = 0;
  for (size_t i = 0; i < a.coords.size(); ++i)
    idx = idx * spec_.cyclic_orders[i] + a.coords[i];
  if (spec_.has_involution) idx = idx * 2 + a.flip;
  return idx;
}

GroupElement StructuredGroup::element_at(long long index) const {
  if (index < 0 || index >= order_)
    throw std::invalid_argument("element_at: index out of range");
  GroupElement r;
  r.coords.resize(spec_.cyclic_orders.size());
  if (spec_.has_involution) {
    r.flip = static_cast<int>(index % 2);
    index /= 2;
  }
  for (int i = factor_count() - 1; i >= 0; --i) {
    r.coords[i] = static_cast<int>(index % spec_.cyclic_orders[i]);
    index /= spec_.cyclic_orders[i];
  }
  return r;
}

int StructuredGroup::element_order(const GroupElement& a) const {
  check(a);
  GroupElement e = identity();
  GroupElement cur = a;
  int k = 1;
  while (!(cur == e)) {
    cur = multiply(cur, a);
    ++k;
    if (k > order_) throw std::logic_error("element_order: did not cycle");
  }
  return k;
}

std::vector<GroupElement> StructuredGroup::standard_generators() const {
  std::vector<GroupElement> gens;
  const int k = factor_count();
  for (int i = 0; i < k; ++i) {
    if (spec_.cyclic_orders[i] > 1) {
      std::vector<int> c(k, 0);
      c[i] = 1;
      gens.push_back(from_coords(std::move(c)));
    }
  }
  if (spec_.has_involution) gens.push_back(from_coords(std::vector<int>(k, 0), 1));
  return gens;
}

std::string StructuredGroup::to_string(const GroupElement& a) const {
  std::string s = "(";
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.coords[i]);
  }
  if (spec_.has_involution) s += a.flip ? ";1" : ";0";
  s += ")";
  return s;
}

}  // namespace symcensus
