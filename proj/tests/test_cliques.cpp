#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pgeom/cliques.hpp"
#include "pgeom/constructions.hpp"
#include "pgeom/error.hpp"
#include "pgeom/geometry.hpp"
#include "test_support.hpp"

using namespace pgeom;
using pgeom::test::kFixtures;
using pgeom::test::load_fixture;

namespace {

const Geometry& g3() {
  static const Geometry g(GeometryParams::from_k(3));
  return g;
}
const Geometry& g4() {
  static const Geometry g(GeometryParams::from_k(4));
  return g;
}
const CollinearityGraph& graph3() {
  static const CollinearityGraph g = build_graph(g3());
  return g;
}
const CollinearityGraph& graph4() {
  static const CollinearityGraph g = build_graph(g4());
  return g;
}

Clique fixture_clique(const char* stem) { return load_fixture(stem).to_clique(); }

Clique relabel(const Clique& c, const Permutation& p) {
  std::vector<ElementSet> pts;
  for (const auto& x : c.points()) pts.push_back(apply(p, x));
  return Clique(std::move(pts));
}

}  // namespace

TEST_CASE("collinearity graph at n = 7") {
  const auto& g = graph3();
  REQUIRE(g.size() == 35);
  for (std::size_t u = 0; u < g.size(); ++u) {
    CHECK(g.degree(u) == 18);
    CHECK_FALSE(g.adjacent(u, u));
    for (std::size_t v = 0; v < g.size(); ++v) {
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      if (u != v) CHECK(g.adjacent(u, v) == g3().is_collinear(g.point(u), g.point(v)));
    }
  }
}

TEST_CASE("collinearity graph at n = 15") {
  const auto& g = graph4();
  REQUIRE(g.size() == 6435);
  CHECK(g.ground_size() == 15);
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const auto u = pick(rng), v = pick(rng);
    if (u == v) continue;
    CHECK(g.adjacent(u, v) == g4().is_collinear(g.point(u), g.point(v)));
  }
}

TEST_CASE("maximal cliques at n = 7") {
  std::vector<std::vector<std::size_t>> first, second;
  const auto count = enumerate_maximal_cliques(graph3(), {}, [&](std::span<const std::size_t> vs) {
    first.emplace_back(vs.begin(), vs.end());
    return true;
  });
  CHECK(count == 30);
  enumerate_maximal_cliques(graph3(), {}, [&](std::span<const std::size_t> vs) {
    second.emplace_back(vs.begin(), vs.end());
    return true;
  });
  CHECK(first == second);
  std::set<std::vector<std::size_t>> distinct(first.begin(), first.end());
  CHECK(distinct.size() == 30);
  for (const auto& vs : first) {
    CHECK(vs.size() == 7);
    CHECK(std::is_sorted(vs.begin(), vs.end()));
    const Clique c = graph3().clique_of(vs);
    CHECK(g3().is_singular_subspace(c.points()));
    CHECK(is_maximal(g3(), c));
  }
}

TEST_CASE("enumeration options") {
  EnumerationOptions limited;
  limited.limit = 4;
  CHECK(maximal_cliques(graph3(), limited).size() == 4);

  EnumerationOptions through;
  through.through_vertex = 5;
  const auto around = maximal_cliques(graph3(), through);
  // Each point lies in 6 of the 30 planes: 30 * 7 / 35.
  CHECK(around.size() == 6);
  for (const auto& c : around) CHECK(c.contains(graph3().point(5)));

  EnumerationOptions too_big;
  too_big.min_size = 8;
  CHECK(maximal_cliques(graph3(), too_big).empty());

  EnumerationOptions bad;
  bad.through_vertex = 35;
  CHECK_THROWS_AS(maximal_cliques(graph3(), bad), InvalidArgument);
}

TEST_CASE("cliques through one vertex at n = 15 respect the Ryser bound") {
  EnumerationOptions o;
  o.through_vertex = 0;
  o.limit = 25;
  std::size_t seen = 0;
  enumerate_maximal_cliques(graph4(), o, [&](std::span<const std::size_t> vs) {
    ++seen;
    CHECK(vs.size() <= 15);
    CHECK(std::find(vs.begin(), vs.end(), std::size_t{0}) != vs.end());
    CHECK(is_maximal(g4(), graph4().clique_of(vs)));
    return true;
  });
  CHECK(seen == 25);
}

TEST_CASE("Clique validation") {
  const auto c1 = fixture_clique("fig5_c1");
  std::vector<ElementSet> pts = c1.points();
  pts.push_back(ElementSet::of(15, {1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK_THROWS_AS(Clique{pts}, InvalidArgument);
  CHECK_THROWS_AS(Clique({ElementSet::of(15, {1, 2}), ElementSet::of(15, {1, 2, 3, 4})}), InvalidArgument);
  CHECK_THROWS_AS(Clique({ElementSet::of(15, {1, 2}), ElementSet::of(15, {1, 2})}), InvalidArgument);
  CHECK(c1.same_points(Clique(c1.sorted_points())));
  CHECK(c1.half_size() == 4);
}

TEST_CASE("is_maximal") {
  for (const char* f : kFixtures) CHECK(is_maximal(g4(), fixture_clique(f)));
  auto pts = fixture_clique("fig8_c4").points();
  pts.pop_back();
  CHECK_FALSE(is_maximal(g4(), Clique(pts)));
}

TEST_CASE("center points of the fixtures") {
  CHECK(center_points(fixture_clique("fig5_c1")).size() == 15);
  CHECK(center_points(fixture_clique("fig6_c2")).size() == 3);
  CHECK(center_points(fixture_clique("fig7_c3")).size() == 1);
  CHECK(center_points(fixture_clique("fig8_c4")).size() == 1);
  CHECK(center_points(fixture_clique("fig9_noncentered")).empty());
}

TEST_CASE("lines inside") {
  CHECK(lines_inside(fixture_clique("fig5_c1")).size() == 35);
  const auto c4 = fixture_clique("fig8_c4");
  const auto center = center_points(c4).front();
  const auto lines = lines_inside(c4);
  CHECK(lines.size() == 7);
  for (const auto& l : lines) CHECK(l.contains(center));

  const auto c1 = fixture_clique("fig5_c1");
  const Line l = g4().line_through(c1[0], c1[1]);
  CHECK(lines_inside(Clique({l.points.begin(), l.points.end()})).size() == 1);
}

TEST_CASE("classification of the fixtures") {
  const CliqueTag expected[] = {CliqueTag::C1, CliqueTag::C2, CliqueTag::C3, CliqueTag::C4, CliqueTag::NonCentered};
  for (std::size_t i = 0; i < kFixtures.size(); ++i) {
    const auto cls = classify_clique(fixture_clique(kFixtures[i]));
    CHECK(cls.tag == expected[i]);
  }

  const auto c2 = classify_clique(fixture_clique("fig6_c2"));
  REQUIRE(c2.planes.size() == 3);
  std::vector<ElementSet> common = c2.planes[0];
  for (const auto& plane : c2.planes) {
    std::vector<ElementSet> next;
    std::set_intersection(common.begin(), common.end(), plane.begin(), plane.end(), std::back_inserter(next));
    common = next;
  }
  CHECK(common.size() == 3);
  CHECK(symdiff(common[0], common[1]) == common[2]);
  CHECK(common == c2.centers);

  const auto c3 = classify_clique(fixture_clique("fig7_c3"));
  CHECK(c3.planes.size() == 1);
  CHECK(c3.centers.size() == 1);
  CHECK(std::binary_search(c3.planes[0].begin(), c3.planes[0].end(), c3.centers[0]));
  CHECK(c3.bijection_index == 1);

  const auto c4 = classify_clique(fixture_clique("fig8_c4"));
  CHECK(c4.planes.empty());
  CHECK(c4.line_count == 7);

  const auto nc = classify_clique(fixture_clique("fig9_noncentered"));
  CHECK_FALSE(nc.bijection_index.has_value());
  CHECK_FALSE(nc.chosen_center.has_value());
}

TEST_CASE("classification is invariant under relabelling") {
  std::mt19937_64 rng(2024);
  for (const char* f : kFixtures) {
    const Clique c = fixture_clique(f);
    const auto tag = classify_clique(c).tag;
    for (int trial = 0; trial < 10; ++trial) {
      const Clique r = relabel(c, Permutation::random(15, rng));
      const auto cls = classify_clique(r);
      CHECK(cls.tag == tag);
      CHECK(cls.centers.size() == center_points(c).size());
    }
  }
}

TEST_CASE("bijection index does not depend on the chosen center") {
  for (const char* f : kFixtures) {
    const Clique c = fixture_clique(f);
    const auto centers = center_points(c);
    std::set<int> indices;
    for (const auto& o : centers) indices.insert(bijection_index(decompose(c, o).fano_bijection()));
    CHECK(indices.size() <= 1);
  }
}

TEST_CASE("tag and index correspondence") {
  CHECK(tag_for_index(7) == CliqueTag::C1);
  CHECK(tag_for_index(3) == CliqueTag::C2);
  CHECK(tag_for_index(1) == CliqueTag::C3);
  CHECK(tag_for_index(0) == CliqueTag::C4);
  for (int idx : {0, 1, 3, 7}) CHECK(index_for_tag(tag_for_index(idx)) == idx);
  CHECK_THROWS_AS(tag_for_index(2), InconsistencyError);
  CHECK_THROWS_AS(index_for_tag(CliqueTag::NonCentered), InvalidArgument);
  CHECK(to_string(CliqueTag::NonCentered) == "NON_CENTERED");
  CHECK(to_string(CliqueTag::C3) == "C3");
}

TEST_CASE("classify rejects cliques of the wrong shape") {
  auto pts = fixture_clique("fig5_c1").points();
  pts.pop_back();
  CHECK_THROWS_AS(classify_clique(Clique(pts)), InvalidArgument);
  CHECK_THROWS_AS(classify_clique(hyperplane_complement_clique(3)), InvalidArgument);
}
