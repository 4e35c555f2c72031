#include <doctest.h>

#include <algorithm>
#include <vector>

#include "symcensus/perm.hpp"
#include "symcensus/perm_group.hpp"

using namespace symcensus;

namespace {

Permutation cycle_perm(int n) {  // i -> i+1 mod n
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(img);
}

Permutation reflection_perm(int n) {  // i -> -i mod n
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Permutation(img);
}

}  // namespace

TEST_CASE("permutation composition is left to right") {
  const Permutation p({1, 0, 2});
  const Permutation q({0, 2, 1});
  const Permutation pq = p.then(q);
  for (int x = 0; x < 3; ++x) CHECK(pq(x) == q(p(x)));
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(Permutation(5).is_identity());
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("permutation constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("smallest moved point") {
  CHECK(Permutation(4).smallest_moved() == -1);
  CHECK(Permutation({0, 1, 3, 2}).smallest_moved() == 2);
}

TEST_CASE("symmetric group order via stabilizer chain") {
  for (int n : {3, 4, 5, 6, 7}) {
    std::vector<int> transp(n), rot(n);
    for (int i = 0; i < n; ++i) {
      transp[i] = i;
      rot[i] = (i + 1) % n;
    }
    std::swap(transp[0], transp[1]);
    const PermGroup sym =
        PermGroup::from_generators({Permutation(transp), Permutation(rot)}, n);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(sym.order() == fact);
    CHECK(sym.is_transitive());
    CHECK(sym.point_stabilizer_order(0) == fact / n);
  }
}

TEST_CASE("dihedral group of the hexagon") {
  const PermGroup d6 = PermGroup::from_generators({cycle_perm(6), reflection_perm(6)}, 6);
  CHECK(d6.order() == 12);
  CHECK(d6.is_transitive());
  CHECK_FALSE(d6.is_semiregular());  // reflections fix points
  CHECK(d6.contains(cycle_perm(6).then(cycle_perm(6))));
  std::vector<int> odd_img{1, 0, 5, 4, 3, 2};
  CHECK(d6.contains(Permutation(odd_img)));  // i -> 1-i is a reflection
  CHECK_FALSE(d6.contains(Permutation({1, 0, 2, 3, 4, 5})));
}

TEST_CASE("cyclic group is regular") {
  const PermGroup c6 = PermGroup::from_generators({cycle_perm(6)}, 6);
  CHECK(c6.order() == 6);
  CHECK(c6.is_semiregular());
  CHECK(c6.is_transitive());
  const auto elems = c6.elements(10);
  CHECK(elems.size() == 6);
  CHECK_THROWS_AS(c6.elements(5), CapExceeded);
}

TEST_CASE("representative_to maps the first base point") {
  const PermGroup d6 = PermGroup::from_generators({cycle_perm(6), reflection_perm(6)}, 6);
  const int b0 = d6.base().at(0);
  for (int v = 0; v < 6; ++v) {
    const auto rep = d6.representative_to(v);
    REQUIRE(rep.has_value());
    CHECK((*rep)(b0) == v);
  }
}

TEST_CASE("orbits of an intransitive group") {
  // <(0 1 2)> acting on 5 points: orbits {0,1,2}, {3}, {4}.
  const PermGroup g = PermGroup::from_generators({Permutation({1, 2, 0, 3, 4})}, 5);
  const auto parts = g.orbits();
  CHECK(parts.size() == 3);
  CHECK(g.orbit_of(1) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(g.is_transitive());
  CHECK(g.order() == 3);
}

TEST_CASE("trivial group") {
  const PermGroup t = PermGroup::trivial(4);
  CHECK(t.order() == 1);
  CHECK(t.is_trivial());
  CHECK(t.is_semiregular());
  CHECK_FALSE(t.is_transitive());
}

TEST_CASE("orbit partition of raw generators") {
  const auto parts = orbit_partition({Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}, 4);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::vector<int>{0, 1});
  CHECK(parts[1] == std::vector<int>{2, 3});
}
