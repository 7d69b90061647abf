#include <doctest.h>

#include <random>

#include "pgeom/element_set.hpp"
#include "pgeom/error.hpp"
#include "pgeom/permutation.hpp"
#include "test_support.hpp"

using namespace pgeom;
using pgeom::test::s15;
using pgeom::test::s7;

TEST_CASE("symdiff examples") {
  CHECK(symdiff(s15({1, 3, 5, 7, 9, 11, 13, 15}), s15({2, 3, 6, 7, 10, 11, 14, 15})) ==
        s15({1, 2, 5, 6, 9, 10, 13, 14}));
  const auto a = s15({2, 4, 8});
  CHECK(symdiff(a, a).is_empty());
  CHECK(symdiff(a, ElementSet::empty(15)) == a);
  CHECK_THROWS_AS(symdiff(a, s7({1})), InvalidArgument);
}

TEST_CASE("intersection_size examples") {
  CHECK(intersection_size(s15({1, 3, 5, 7, 9, 11, 13, 15}), s15({2, 3, 6, 7, 10, 11, 14, 15})) == 4);
  const auto a = s15({1, 5, 6, 12});
  CHECK(intersection_size(a, a) == a.size());
  CHECK(intersection_size(s15({1, 2}), s15({3, 4})) == 0);
  CHECK_THROWS_AS(intersection_size(a, s7({1})), InvalidArgument);
}

TEST_CASE("complement_in examples") {
  const auto universe = ElementSet::full(15);
  const auto eight = s15({8, 9, 10, 11, 12, 13, 14, 15});
  CHECK(complement_in(eight, universe) == s15({1, 2, 3, 4, 5, 6, 7}));
  CHECK(complement_in(universe, universe).is_empty());
  CHECK(complement_in(ElementSet::empty(15), universe) == universe);
  CHECK_THROWS_AS(complement_in(s15({1, 2}), s15({2, 3})), InvalidArgument);
}

TEST_CASE("apply examples") {
  std::mt19937_64 rng(7);
  const auto a = s15({1, 4, 9});
  CHECK(apply(Permutation::identity(15), a) == a);
  CHECK(apply(Permutation::transposition(15, 1, 2), s15({1, 3})) == s15({2, 3}));
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = Permutation::random(15, rng);
    const ElementSet x(15, (rng() & 0xFFFE));
    CHECK(apply(p, x).size() == x.size());
  }
  CHECK_THROWS_AS(apply(Permutation::identity(7), a), InvalidArgument);
}

TEST_CASE("symdiff is an elementary abelian group on 4-subsets of [7]") {
  const auto quads = subsets_of_size(ElementSet::full(7), 4);
  REQUIRE(quads.size() == 35);
  const auto empty = ElementSet::empty(7);
  for (const auto& a : quads) {
    CHECK(symdiff(a, empty) == a);
    CHECK(symdiff(a, a) == empty);
    for (const auto& b : quads) {
      CHECK(symdiff(a, b) == symdiff(b, a));
      CHECK(symdiff(a, b).size() == a.size() + b.size() - 2 * intersection_size(a, b));
      for (const auto& c : quads) {
        if (symdiff(symdiff(a, b), c) != symdiff(a, symdiff(b, c))) FAIL("associativity");
      }
    }
  }
}

TEST_CASE("apply distributes over symdiff") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = Permutation::random(15, rng);
    const ElementSet a(15, rng() & 0xFFFE), b(15, rng() & 0xFFFE);
    CHECK(apply(p, symdiff(a, b)) == symdiff(apply(p, a), apply(p, b)));
    CHECK(symdiff(a, b).size() == a.size() + b.size() - 2 * intersection_size(a, b));
  }
}

TEST_CASE("ElementSet basics") {
  const auto a = s15({3, 1, 5});
  CHECK(a.to_string() == "{1,3,5}");
  CHECK(a.elements() == std::vector<int>{1, 3, 5});
  CHECK(a.min_element() == 1);
  CHECK(a.max_element() == 5);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.with(2) == s15({1, 2, 3, 5}));
  CHECK(a.without(3) == s15({1, 5}));
  CHECK(s15({1, 5}).is_subset_of(a));
  CHECK(ElementSet::full(7).size() == 7);
  CHECK_THROWS_AS(ElementSet::of(7, {8}), InvalidArgument);
  CHECK_THROWS_AS(ElementSet::of(7, {0}), InvalidArgument);
  CHECK_THROWS_AS(ElementSet(7, 1), InvalidArgument);
  CHECK_THROWS_AS(ElementSet::full(64), InvalidArgument);
  CHECK(subsets_of_size(ElementSet::full(15), 8).size() == 6435);
}

TEST_CASE("subsets_of_size is ascending") {
  const auto subsets = subsets_of_size(ElementSet::full(7), 3);
  REQUIRE(subsets.size() == 35);
  for (std::size_t i = 1; i < subsets.size(); ++i) CHECK(subsets[i - 1].bits() < subsets[i].bits());
}

TEST_CASE("permutation composition reads left to right") {
  const Permutation p({2, 3, 1});  // 1->2, 2->3, 3->1
  const Permutation q = Permutation::transposition(3, 1, 2);
  const Permutation pq = p * q;
  for (int x = 1; x <= 3; ++x) CHECK(pq(x) == q(p(x)));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.to_cycle_string() == "(1 2 3)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(p.to_string() == "[2,3,1]");
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::identity(3) * Permutation::identity(4), InvalidArgument);
}

TEST_CASE("random permutations are bijections and seed-determined") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    const auto p = Permutation::random(15, a);
    CHECK(p == Permutation::random(15, b));
    auto imgs = p.images();
    std::sort(imgs.begin(), imgs.end());
    for (int x = 0; x < 15; ++x) CHECK(imgs[static_cast<std::size_t>(x)] == x + 1);
  }
}
