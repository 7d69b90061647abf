#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "pgeom/error.hpp"
#include "pgeom/fano.hpp"
#include "pgeom/geometry.hpp"
#include "test_support.hpp"

using namespace pgeom;

namespace {

// Slots of the labelled points.
constexpr int P1 = 0, P2 = 1, P12 = 2, P3 = 3, P13 = 4, P23 = 5, P123 = 6;

ElementSet coordinate_block(int r, int offset) {
  std::vector<int> e;
  for (int j = 1; j <= 7; ++j) {
    if (std::popcount(static_cast<unsigned>(r & j)) % 2 == 1) e.push_back(j + offset);
  }
  return ElementSet::of(15, e);
}

FanoPlane plane_at(int offset) {
  return FanoPlane::from_generators(coordinate_block(1, offset), coordinate_block(2, offset),
                                    coordinate_block(4, offset));
}

const FanoPlane& source() {
  static const FanoPlane p = plane_at(0);
  return p;
}
const FanoPlane& target() {
  static const FanoPlane p = plane_at(8);
  return p;
}

bool is_line_slots(std::array<int, 3> s) {
  std::sort(s.begin(), s.end());
  for (const auto& l : FanoPlane::slot_lines()) {
    std::array<int, 3> t = {l[0], l[1], l[2]};
    std::sort(t.begin(), t.end());
    if (s == t) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Fano planes on a 7-set") {
  const auto ground = ElementSet::full(7);
  const auto planes = fano_planes_on(ground);
  CHECK(planes.size() == 30);
  const Geometry g(GeometryParams::from_k(3));
  for (const auto& p : planes) {
    CHECK(g.is_singular_subspace(std::vector<ElementSet>(p.points().begin(), p.points().end())));
    CHECK(p.support() == ground);
    CHECK(p.lines().size() == 7);
  }
  CHECK_THROWS_AS(fano_planes_on(ElementSet::of(15, {1, 2, 3, 4, 5, 6})), InvalidArgument);
}

TEST_CASE("planes on two 7-sets correspond under relabelling") {
  const auto a = fano_planes_on(ElementSet::of(15, {1, 2, 3, 4, 5, 6, 7}));
  const auto b = fano_planes_on(ElementSet::of(15, {9, 10, 11, 12, 13, 14, 15}));
  REQUIRE(a.size() == 30);
  REQUIRE(b.size() == 30);
  std::vector<std::uint8_t> images(15);
  for (int x = 1; x <= 15; ++x) images[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(x <= 7 ? x + 8 : x >= 9 ? x - 8 : x);
  const Permutation shift(images);
  std::set<std::vector<ElementSet>> mapped, expected;
  for (const auto& p : a) {
    std::vector<ElementSet> pts;
    for (const auto& x : p.points()) pts.push_back(apply(shift, x));
    std::sort(pts.begin(), pts.end());
    mapped.insert(pts);
  }
  for (const auto& p : b) {
    std::vector<ElementSet> pts(p.points().begin(), p.points().end());
    std::sort(pts.begin(), pts.end());
    expected.insert(pts);
  }
  CHECK(mapped == expected);
}

TEST_CASE("plane structure") {
  const auto& p = source();
  std::map<int, int> on_lines;
  for (const auto& l : FanoPlane::slot_lines()) {
    for (auto s : l) ++on_lines[s];
    CHECK(symdiff(p.point(l[0]), p.point(l[1])) == p.point(l[2]));
  }
  for (const auto& [slot, count] : on_lines) CHECK(count == 3);
  const auto ground = p.support();
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      const auto ci = complement_in(p.point(i), ground);
      const auto cj = complement_in(p.point(j), ground);
      CHECK(ci.size() == 3);
      CHECK(intersection_size(ci, cj) == 1);
    }
  }
  const auto again = FanoPlane::from_points(std::vector<ElementSet>(p.points().begin(), p.points().end()));
  CHECK(again.same_points(p));
  CHECK(p.slot_of(p.point(P13)) == P13);
  CHECK_FALSE(p.slot_of(ElementSet::of(15, {1, 2, 3, 4})).has_value());
}

TEST_CASE("automorphisms") {
  const auto& autos = source().automorphisms();
  CHECK(autos.size() == 168);
  std::set<SlotMap> distinct(autos.begin(), autos.end());
  CHECK(distinct.size() == 168);
  CHECK(distinct.count(identity_slots()) == 1);
  for (const auto& a : autos) {
    for (const auto& l : FanoPlane::slot_lines()) CHECK(is_line_slots({a[l[0]], a[l[1]], a[l[2]]}));
    CHECK(distinct.count(inverse(a)) == 1);
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto& a = autos[rng() % 168];
    const auto& b = autos[rng() % 168];
    CHECK(distinct.count(then(a, b)) == 1);
  }
}

TEST_CASE("SlotMap composition reads left to right") {
  SlotMap a = identity_slots(), b = identity_slots();
  std::swap(a[0], a[1]);
  std::swap(b[1], b[2]);
  const auto ab = then(a, b);
  for (int s = 0; s < 7; ++s) CHECK(ab[static_cast<std::size_t>(s)] == b[a[static_cast<std::size_t>(s)]]);
  CHECK(then(a, inverse(a)) == identity_slots());
}

TEST_CASE("simplices") {
  const std::vector<int> base = {P1, P2, P3, P123};
  CHECK(is_simplex(base));
  const std::vector<int> line_plus = {P1, P2, P12, P3};
  CHECK_FALSE(is_simplex(line_plus));
  int simplices = 0;
  std::vector<bool> choose(7, false);
  std::fill(choose.begin() + 3, choose.end(), true);
  do {
    std::vector<int> s;
    for (int i = 0; i < 7; ++i) {
      if (choose[static_cast<std::size_t>(i)]) s.push_back(i);
    }
    CHECK(is_simplex(s) == complement_is_line(s));
    simplices += is_simplex(s) ? 1 : 0;
  } while (std::next_permutation(choose.begin(), choose.end()));
  CHECK(simplices == 7);

  const std::vector<ElementSet> pts = {source().point(P1), source().point(P2), source().point(P3),
                                       source().point(P123)};
  CHECK(is_simplex(source(), pts));
}

TEST_CASE("representatives and their indices") {
  CHECK(bijection_index(representative_of_index(source(), target(), 7)) == 7);
  CHECK(bijection_index(representative_of_index(source(), target(), 3)) == 3);
  CHECK(bijection_index(representative_of_index(source(), target(), 1)) == 1);
  const auto zero = representative_of_index(source(), target(), 0);
  CHECK(bijection_index(zero) == 0);
  CHECK(zero.map[P123] == P23);
  CHECK(zero.map[P23] == P12);
  CHECK(zero.map[P12] == P13);
  CHECK(zero.map[P13] == P123);
  const auto three = representative_of_index(source(), target(), 3);
  CHECK(three.map[P12] == P13);
  CHECK(three.map[P13] == P12);
  for (int bad : {2, 4, 5, 6, -1, 8}) CHECK_THROWS_AS(representative_of_index(source(), target(), bad), InvalidArgument);

  const FanoBijection id{source(), source(), identity_slots()};
  CHECK(bijection_index(id) == 7);
  CHECK(id(source().point(P13)) == source().point(P13));
}

TEST_CASE("index spectrum over all 5040 bijections") {
  const auto all = all_bijections(source(), target());
  REQUIRE(all.size() == 5040);
  std::map<int, int> tally;
  for (const auto& d : all) ++tally[bijection_index(d)];
  CHECK(tally == std::map<int, int>{{0, 1344}, {1, 2352}, {3, 1176}, {7, 168}});
}

TEST_CASE("index is a class invariant") {
  const auto all = all_bijections(source(), target());
  const auto& ga = source().automorphisms();
  const auto& gb = target().automorphisms();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& d = all[rng() % all.size()];
    const auto& g1 = ga[rng() % 168];
    const auto& g2 = gb[rng() % 168];
    const FanoBijection e{source(), target(), then(then(g1, d.map), g2)};
    CHECK(bijection_index(e) == bijection_index(d));
  }
}

TEST_CASE("a bijection sending a simplex to a simplex has index 1, 3 or 7") {
  std::vector<std::vector<int>> simplices;
  std::vector<bool> choose(7, false);
  std::fill(choose.begin() + 3, choose.end(), true);
  do {
    std::vector<int> s;
    for (int i = 0; i < 7; ++i) {
      if (choose[static_cast<std::size_t>(i)]) s.push_back(i);
    }
    if (is_simplex(s)) simplices.push_back(s);
  } while (std::next_permutation(choose.begin(), choose.end()));

  for (const auto& d : all_bijections(source(), target())) {
    bool sends = false;
    for (const auto& s : simplices) {
      std::vector<int> image;
      for (int x : s) image.push_back(d.map[static_cast<std::size_t>(x)]);
      if (is_simplex(image)) {
        sends = true;
        break;
      }
    }
    if (sends) CHECK(bijection_index(d) != 0);
  }
}

TEST_CASE("equivalence search") {
  const auto all = all_bijections(source(), target());
  CHECK(are_equivalent(all[17], all[17]));
  CHECK_FALSE(are_equivalent(representative_of_index(source(), target(), 3),
                             representative_of_index(source(), target(), 1)));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    CHECK(are_equivalent(a, b) == (bijection_index(a) == bijection_index(b)));
  }
  const auto witness = find_equivalence(all[0], all[100]);
  if (witness) {
    CHECK(then(then(witness->first, all[0].map), witness->second) == all[100].map);
  }
}

TEST_CASE("partition into four classes") {
  const auto partition = partition_bijections(source(), target());
  CHECK(partition.class_count == 4);
  std::vector<int> indices = partition.class_index;
  std::sort(indices.begin(), indices.end());
  CHECK(indices == std::vector<int>{0, 1, 3, 7});
  const auto all = all_bijections(source(), target());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(partition.class_index[static_cast<std::size_t>(partition.class_of[i])] == bijection_index(all[i]));
  }
}
