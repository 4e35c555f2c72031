#include "symcensus/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcensus {

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens, int degree,
                                     const std::vector<int>& base_prefix) {
  PermGroup g;
  g.degree_ = degree;
  for (auto& p : gens) {
    if (p.degree() != degree)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!p.is_identity()) g.gens_.push_back(std::move(p));
  }
  g.build(base_prefix);
  return g;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

int PermGroup::strong_generator_count() const {
  int c = 0;
  for (const auto& l : levels_) c += static_cast<int>(l.gens.size());
  return c;
}

std::vector<const Permutation*> PermGroup::gens_from_level(int level) const {
  std::vector<const Permutation*> out;
  for (size_t j = level; j < levels_.size(); ++j)
    for (const auto& p : levels_[j].gens) out.push_back(&p);
  return out;
}

void PermGroup::update_orbit(int level) {
  Level& l = levels_[level];
  auto gens = gens_from_level(level);
  l.orbit.clear();
  l.slot.assign(degree_, -1);
  l.trans.clear();
  l.trans_inv.clear();
  l.orbit.push_back(l.base_point);
  l.slot[l.base_point] = 0;
  l.trans.push_back(Permutation(degree_));
  l.trans_inv.push_back(Permutation(degree_));
  for (size_t qi = 0; qi < l.orbit.size(); ++qi) {
    int x = l.orbit[qi];
    for (const Permutation* s : gens) {
      int y = (*s)(x);
      if (l.slot[y] == -1) {
        l.slot[y] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(y);
        l.trans.push_back(l.trans[l.slot[x]].then(*s));
        l.trans_inv.push_back(l.trans.back().inverse());
      }
    }
  }
}

std::pair<Permutation, int> PermGroup::sift(Permutation h, int from_level) const {
  for (size_t i = from_level; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    int x = h(l.base_point);
    if (x == l.base_point) continue;
    if (l.slot[x] == -1) return {std::move(h), static_cast<int>(i)};
    h = h.then(l.trans_inv[l.slot[x]]);
  }
  return {std::move(h), static_cast<int>(levels_.size())};
}

void PermGroup::insert_strong_generator(Permutation h, int level) {
  if (level == static_cast<int>(levels_.size())) {
    Level l;
    l.base_point = h.smallest_moved();
    levels_.push_back(std::move(l));
    update_orbit(level);
  }
  levels_[level].gens.push_back(std::move(h));
}

// Checks the Schreier condition at `level`: every Schreier generator of the
// level's orbit must sift to the identity through the deeper chain. On
// failure the residue is installed as a new strong generator and its level is
// reported so the caller can re-verify downward from there.
bool PermGroup::verify_level(int level, int& inserted_at) {
  update_orbit(level);
  Level& l = levels_[level];
  auto gens = gens_from_level(level);
  for (size_t qi = 0; qi < l.orbit.size(); ++qi) {
    int x = l.orbit[qi];
    for (const Permutation* s : gens) {
      int y = (*s)(x);
      Permutation schreier = l.trans[l.slot[x]].then(*s).then(l.trans_inv[l.slot[y]]);
      if (schreier.is_identity()) continue;
      auto [residue, lev] = sift(std::move(schreier), level + 1);
      if (!residue.is_identity()) {
        insert_strong_generator(std::move(residue), lev);
        inserted_at = lev;
        return false;
      }
    }
  }
  return true;
}

void PermGroup::build(const std::vector<int>& base_prefix) {
  for (int b : base_prefix) {
    if (b < 0 || b >= degree_)
      throw std::invalid_argument("PermGroup: base point out of range");
    Level l;
    l.base_point = b;
    levels_.push_back(std::move(l));
    update_orbit(static_cast<int>(levels_.size()) - 1);
  }
  for (const auto& g : gens_) {
    auto [residue, lev] = sift(g, 0);
    if (!residue.is_identity()) insert_strong_generator(std::move(residue), lev);
  }
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    int inserted_at = -1;
    if (verify_level(i, inserted_at))
      --i;
    else
      i = inserted_at;
  }
  order_ = 1;
  for (auto& l : levels_) order_ *= static_cast<unsigned long>(l.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, lev] = sift(p, 0);
  (void)lev;
  return residue.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  return orbit_partition(gens_, degree_);
}

std::vector<int> PermGroup::orbit_of(int v) const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> orbit = {v};
  seen[v] = 1;
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (const auto& g : gens_) {
      int y = g(orbit[qi]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit_of(0).size()) == degree_;
}

bool PermGroup::is_semiregular() const {
  for (const auto& orb : orbits())
    if (order_ != static_cast<unsigned long>(orb.size())) return false;
  return true;
}

BigInt PermGroup::point_stabilizer_order(int v) const {
  if (v < 0 || v >= degree_)
    throw std::invalid_argument("point_stabilizer_order: point out of range");
  BigInt q, r;
  BigInt orb(static_cast<unsigned long>(orbit_of(v).size()));
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), order_.get_mpz_t(), orb.get_mpz_t());
  if (r != 0) throw std::logic_error("point_stabilizer_order: orbit-stabilizer violated");
  return q;
}

std::optional<Permutation> PermGroup::representative_to(int v) const {
  if (levels_.empty() || v < 0 || v >= degree_) return std::nullopt;
  const Level& l = levels_[0];
  if (l.slot[v] == -1) return std::nullopt;
  return l.trans[l.slot[v]];
}

void PermGroup::enumerate(int level, int stop_level, const Permutation& suffix,
                          std::vector<Permutation>& out, std::size_t cap) const {
  if (level < stop_level) {
    if (out.size() >= cap)
      throw CapExceeded("PermGroup::elements: enumeration cap exceeded");
    out.push_back(suffix);
    return;
  }
  const Level& l = levels_[level];
  // g = h.then(t_x) with h in the deeper subgroup, so deeper transversals are
  // applied first; this canonical decomposition makes each element unique.
  for (size_t i = 0; i < l.orbit.size(); ++i)
    enumerate(level - 1, stop_level, suffix.then(l.trans[i]), out, cap);
}

std::vector<Permutation> PermGroup::elements_fixing_base_prefix(int fixed_levels,
                                                                std::size_t cap) const {
  std::vector<Permutation> out;
  if (fixed_levels >= static_cast<int>(levels_.size())) {
    out.push_back(Permutation(degree_));
    return out;
  }
  // Element = t_{k} . t_{k-1} ... t_{fixed}: deepest transversal applied first,
  // so each element appears exactly once via its canonical decomposition.
  enumerate(static_cast<int>(levels_.size()) - 1, fixed_levels, Permutation(degree_), out, cap);
  return out;
}

std::vector<std::vector<int>> orbit_partition(const std::vector<Permutation>& gens, int n) {
  std::vector<int> rep(n, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    if (rep[v] != -1) continue;
    std::vector<int> orbit = {v};
    rep[v] = v;
    for (size_t qi = 0; qi < orbit.size(); ++qi)
      for (const auto& g : gens) {
        int y = g(orbit[qi]);
        if (rep[y] == -1) {
          rep[y] = v;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace symcensus
