#include <doctest.h>

#include "symcensus/constructions.hpp"
#include "symcensus/group.hpp"

using namespace symcensus;

TEST_CASE("cyclic group arithmetic") {
  const StructuredGroup z6 = make_group({{6}, false, {}});
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());
  const GroupElement a = z6.from_coords({4});
  const GroupElement b = z6.from_coords({5});
  CHECK(z6.multiply(a, b) == z6.from_coords({3}));
  CHECK(z6.multiply(a, z6.inverse(a)) == z6.identity());
  CHECK(z6.element_order(z6.from_coords({2})) == 3);
  CHECK(z6.element_order(z6.identity()) == 1);
}

TEST_CASE("element index round trip") {
  const StructuredGroup g = make_group({{3, 4}, true, {1, -1}});
  CHECK(g.order() == 24);
  for (long long i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("involution inverts the marked factor") {
  // (u, e)(v, f) = (u + s^e(v), e+f): with z inverting the second factor,
  // z * y * z = y^-1.
  const StructuredGroup g = make_group({{5, 7}, true, {1, -1}});
  CHECK_FALSE(g.is_abelian());
  const GroupElement y = g.from_coords({0, 1});
  const GroupElement z = g.from_coords({0, 0}, 1);
  CHECK(g.element_order(z) == 2);
  const GroupElement zyz = g.multiply(g.multiply(z, y), z);
  CHECK(zyz == g.inverse(y));
  // The first factor is untouched by z.
  const GroupElement x = g.from_coords({1, 0});
  CHECK(g.multiply(g.multiply(z, x), z) == x);
}

TEST_CASE("semidirect products are recognized as non-abelian only when the action is real") {
  // A -1 action on a factor of order 2 is trivial; the spec normalizes it.
  const StructuredGroup g = make_group({{2}, true, {-1}});
  CHECK(g.is_abelian());
  CHECK(g.order() == 4);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(make_group({{0}, false, {}}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({{3}, false, {-1}}), std::invalid_argument);
}

TEST_CASE("standard generators generate the group") {
  for (const StructuredGroupSpec& spec :
       {StructuredGroupSpec{{6}, false, {}}, StructuredGroupSpec{{3, 4}, true, {1, -1}},
        StructuredGroupSpec{{5, 5, 3}, true, {1, 1, -1}}}) {
    const StructuredGroup g = make_group(spec);
    const PermGroup reg = regular_representation(g);
    CHECK(reg.order() == (long)g.order());
    CHECK(reg.is_transitive());
    CHECK(reg.is_semiregular());
  }
}

TEST_CASE("element validity") {
  const StructuredGroup g = make_group({{3}, false, {}});
  CHECK(g.is_valid(g.from_coords({2})));
  CHECK_FALSE(g.is_valid(GroupElement{{3}, 0}));
  CHECK_FALSE(g.is_valid(GroupElement{{0}, 1}));
  CHECK_FALSE(g.is_valid(GroupElement{{0, 0}, 0}));
  CHECK(g.from_coords({5}) == g.from_coords({2}));  // coordinates reduce mod the factor order
  CHECK_THROWS_AS(g.from_coords({1, 2}), std::invalid_argument);
}

TEST_CASE("group element printing") {
  const StructuredGroup g = make_group({{3, 4}, true, {1, -1}});
  CHECK(g.to_string(g.from_coords({2, 3}, 1)) == "(2,3;1)");
  const StructuredGroup h = make_group({{6}, false, {}});
  CHECK(h.to_string(h.from_coords({4})) == "(4)");
}
