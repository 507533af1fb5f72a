#include "doctest.h"
#include "hopfpartial/error.hpp"
#include "hopfpartial/groups.hpp"

using hp::FiniteGroup;
using hp::GroupCocycleTable;
using hp::GroupSubset;
using hp::Scalar;

namespace {

hp::GroupPtr klein() { return std::make_shared<FiniteGroup>(FiniteGroup::klein4()); }

}  // namespace

TEST_CASE("group presets satisfy the axioms") {
  for (const char* name : {"trivial", "z2", "z5", "klein4", "s3", "q8"}) {
    FiniteGroup g = FiniteGroup::preset(name);
    for (int x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.mul(0, x) == x);
    }
  }
  CHECK(FiniteGroup::preset("s3").order() == 6);
  CHECK(FiniteGroup::preset("q8").order() == 8);
  CHECK_THROWS_AS(FiniteGroup::preset("nope"), hp::Error);
}

TEST_CASE("invalid tables are rejected") {
  // identity row broken
  CHECK_THROWS_AS(FiniteGroup("bad", {"e", "a"}, {0, 0, 1, 0}), hp::Error);
  // not associative: a latin square loop of order 5 that is not a group
  std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup("loop", {"0", "1", "2", "3", "4"}, loop), hp::Error);
}

TEST_CASE("group json round trip") {
  FiniteGroup s3 = FiniteGroup::s3();
  FiniteGroup back = FiniteGroup::from_json(s3.to_json());
  CHECK(back.order() == 6);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) CHECK(back.mul(x, y) == s3.mul(x, y));
  }
  CHECK(FiniteGroup::from_json(hp::Json("klein4")).order() == 4);
}

TEST_CASE("regular representation is a homomorphism") {
  FiniteGroup s3 = FiniteGroup::s3();
  auto perm = s3.regular_representation();
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      for (int j = 0; j < 6; ++j) CHECK(perm[g][perm[h][j]] == perm[s3.mul(g, h)][j]);
    }
  }
}

TEST_CASE("subsets and the subgroup flag") {
  auto k = klein();
  GroupSubset x(k, {2, 0, 1, 1});
  CHECK(x.size() == 3);
  CHECK(x.members() == std::vector<int>{0, 1, 2});
  CHECK_FALSE(x.is_subgroup());
  CHECK(x.position(2) == 2);
  CHECK(x.position(3) == -1);
  CHECK(GroupSubset(k, {0, 1}).is_subgroup());
  CHECK(GroupSubset(k, {0, 1, 2, 3}).is_subgroup());
  CHECK_THROWS_AS(GroupSubset(k, {}), hp::Error);
}

TEST_CASE("klein four cocycle values") {
  auto k = klein();
  GroupCocycleTable g = GroupCocycleTable::klein_four(k);
  int a = k->index_of("a"), b = k->index_of("b"), ab = k->index_of("ab");
  for (auto [x, y] : std::vector<std::pair<int, int>>{{a, a}, {a, ab}, {b, a}, {b, b}, {ab, b}, {ab, ab}}) {
    CHECK(g(x, y) == Scalar(-1));
  }
  for (auto [x, y] : std::vector<std::pair<int, int>>{{a, b}, {b, ab}, {ab, a}}) CHECK(g(x, y) == Scalar(1));
  for (int x = 0; x < 4; ++x) {
    CHECK(g(0, x) == Scalar(1));
    CHECK(g(x, 0) == Scalar(1));
  }
  CHECK(g.check_cocycle_law().passed());
  CHECK(g.is_normalized());
  CHECK_FALSE(g.is_coboundary());
}

TEST_CASE("cocycle oracle by brute force") {
  // independent oracle: recompute the cocycle law with nested loops
  auto k = klein();
  GroupCocycleTable g = GroupCocycleTable::klein_four(k);
  int bad = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        if (g(x, y) * g(k->mul(x, y), z) != g(x, k->mul(y, z)) * g(y, z)) ++bad;
      }
    }
  }
  CHECK(bad == 0);
  g.values()[5] = Scalar(1);  // γ(a,a)
  CHECK_FALSE(g.check_cocycle_law().passed());
}

TEST_CASE("coboundaries are detected") {
  auto z4 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(4));
  std::vector<Scalar> phi = {Scalar(1), Scalar::root_of_unity(8, 1), Scalar(-1), Scalar::root_of_unity(8, 3)};
  GroupCocycleTable c = GroupCocycleTable::coboundary(z4, phi);
  CHECK(c.check_cocycle_law().passed());
  CHECK(c.is_coboundary());
  CHECK(GroupCocycleTable::trivial(z4).is_coboundary());
}

TEST_CASE("cocycle json round trip") {
  auto k = klein();
  GroupCocycleTable g = GroupCocycleTable::klein_four(k);
  GroupCocycleTable back = GroupCocycleTable::from_json(k, g.to_json());
  CHECK(back.values() == g.values());
  hp::Json j = hp::Json::array({hp::Json::array({"a", "a", -1})});
  GroupCocycleTable one = GroupCocycleTable::from_json(k, j);
  CHECK(one(1, 1) == Scalar(-1));
  CHECK(one(1, 2) == Scalar(1));
}
