#include <doctest.h>

#include "pgeom/commands.hpp"
#include "pgeom/error.hpp"
#include "test_support.hpp"

using namespace pgeom;
using pgeom::test::fixture_path;
using pgeom::test::load_fixture;

TEST_CASE("report rendering") {
  Report r;
  r.command = "demo";
  r.param("k", "4");
  r.result("tag", "C1");
  r.result("matrix", "01\n10\n");
  r.result("count", 3);
  CHECK(render(r, ReportFormat::Text) ==
        "command: demo\nparameters:\n  k: 4\nresults:\n  tag: C1\n  matrix:\n    01\n    10\n  count: 3\n");
  CHECK(render(r, ReportFormat::KeyValue) == "command=demo\nparam.k=4\nresult.tag=C1\nresult.matrix=01,10\nresult.count=3\n");
  r.elapsed_ms = 1.25;
  CHECK(render(r, ReportFormat::KeyValue).find("elapsed_ms=1.2") != std::string::npos);
  CHECK(r.get("tag") == "C1");
  CHECK_FALSE(r.get("missing").has_value());
}

TEST_CASE("construct then classify returns the requested tag") {
  const std::pair<const char*, const char*> expected[] = {
      {"c1", "C1"}, {"c2", "C2"}, {"c3", "C3"}, {"c4", "C4"}, {"non-centered", "NON_CENTERED"},
      {"hyperplane-complement", "C1"}};
  for (const auto& [kind, tag] : expected) {
    const auto out = cmd_construct(kind, HadamardStyle::ZeroOne);
    CHECK(out.report.get("tag") == tag);
    const Report c = cmd_classify(parse_incidence(format_incidence(out.design)), kind);
    CHECK(c.get("tag") == tag);
  }
  CHECK(cmd_construct("c3", HadamardStyle::PlusMinus).report.get("bijection_index") == "1");
  CHECK(cmd_construct("non-centered", HadamardStyle::PlusMinus).report.get("center_count") == "0");
  CHECK_THROWS_AS(construct_clique("c5"), InvalidArgument);
}

TEST_CASE("construct c1 reproduces the fig5 fixture") {
  const auto out = cmd_construct("c1", HadamardStyle::ZeroOne);
  CHECK(format_incidence(out.design) == read_text_file(fixture_path("fig5_c1.inc")));
  CHECK(format_hadamard(out.hadamard, HadamardStyle::ZeroOne) == read_text_file(fixture_path("fig5_c1.had01")));
}

TEST_CASE("classify reports") {
  const Report r = cmd_classify(load_fixture("fig6_c2"), "fig6");
  CHECK(r.get("tag") == "C2");
  CHECK(r.get("center_count") == "3");
  CHECK(r.get("automorphism_order") == "576");
  CHECK(r.get("block_orbits") == "2");
  CHECK(cmd_classify(load_fixture("fig9_noncentered"), "fig9").get("tag") == "NON_CENTERED");
  const Report c1 = cmd_classify(load_fixture("fig5_c1"), "fig5");
  CHECK(c1.get("flag_orbits") == "1");
  CHECK(c1.get("point_primitive") == "yes");
}

TEST_CASE("isomorphic reports") {
  const Design a = load_fixture("fig5_c1");
  CHECK(cmd_isomorphic(a, cmd_relabel(a, 9).design, "a", "b").get("isomorphic") == "yes");
  const Report none = cmd_isomorphic(load_fixture("fig7_c3"), load_fixture("fig8_c4"), "7", "8");
  CHECK(none.get("isomorphic") == "no");
  CHECK(none.get("search") == "exhausted");
  const Design h = design_from_clique(construct_clique("hyperplane-complement"));
  CHECK(cmd_isomorphic(a, h, "a", "h").get("isomorphic") == "yes");
}

TEST_CASE("census on a small scope") {
  CensusOptions o;
  o.planes = 2;
  const Report r = cmd_census(o);
  CHECK(r.get("distinct_cliques") == "20160");
  CHECK(r.get("products") == "20160");
  // 4 plane pairs times the spectrum 1344 / 2352 / 1176 / 168.
  CHECK(r.get("index_tally") == "0:5376 1:9408 3:4704 7:672");
  CHECK(r.get("index7_singular") == "672");
  CHECK(r.get("center_counts_index_7") == "15:168");
  CHECK(r.get("center_counts_index_3") == "3:1176");
  CHECK(r.get("center_counts_index_1") == "1:2352");
  CHECK(r.get("center_counts_index_0") == "1:1344");
  CHECK(render(cmd_census(o), ReportFormat::KeyValue) == render(r, ReportFormat::KeyValue));

  CensusOptions other;
  other.planes = 1;
  other.center = parse_element_list("1,2,3,4,5,6,7,8", 15);
  other.z = parse_element_list("{2,3,4,5,6,7,8}", 15);
  CHECK(cmd_census(other).get("distinct_cliques") == "5040");
  other.z = parse_element_list("1,2,3,4,5,6,9", 15);
  CHECK_THROWS_AS(cmd_census(other), InvalidArgument);
}

TEST_CASE("enumerate") {
  EnumerateCommandOptions o;
  o.k = 3;
  o.sorted = true;
  const Report r = cmd_enumerate(o);
  CHECK(r.get("cliques") == "30");
  CHECK(r.get("degree") == "18");
  CHECK(r.get("singular") == "30");
  CHECK(r.get("size_histogram") == "7:30");
  CHECK(render(cmd_enumerate(o), ReportFormat::Text) == render(r, ReportFormat::Text));
}

TEST_CASE("relabel is seed-determined") {
  const Design d = load_fixture("fig7_c3");
  const auto a = cmd_relabel(d, 42);
  const auto b = cmd_relabel(d, 42);
  CHECK(a.permutation == b.permutation);
  CHECK(a.design.blocks() == b.design.blocks());
  CHECK(d.maps_onto(a.permutation, a.design));
}

TEST_CASE("fano spectrum report") {
  const Report r = cmd_fano_spectrum();
  CHECK(r.get("index_tally") == "0:1344 1:2352 3:1176 7:168");
  CHECK(r.get("classes") == "4");
  CHECK(r.get("classes_match_index") == "yes");
}

TEST_CASE("element lists") {
  CHECK(parse_element_list("8, 9,10", 15) == ElementSet::of(15, {8, 9, 10}));
  CHECK_THROWS_AS(parse_element_list("1,16", 15), ParseError);
  CHECK_THROWS_AS(parse_element_list("1,x", 15), ParseError);
  CHECK_THROWS_AS(parse_element_list("2,2", 15), ParseError);
}
