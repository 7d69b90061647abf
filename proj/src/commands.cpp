#include "pgeom/commands.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <random>
#include <sstream>

#include "pgeom/constructions.hpp"
#include "pgeom/error.hpp"
#include "pgeom/fano.hpp"
#include "pgeom/geometry.hpp"
#include "pgeom/isomorphism.hpp"

namespace pgeom {

namespace {

constexpr int kGround = 15;

ElementSet coordinate_block(int r, int offset) {
  std::uint64_t bits = 0;
  for (int j = 1; j <= 7; ++j) {
    if (std::popcount(static_cast<unsigned>(r & j)) % 2 == 1) bits |= std::uint64_t{1} << (j + offset);
  }
  return ElementSet(kGround, bits);
}

FanoPlane canonical_plane(int offset) {
  return FanoPlane::from_generators(coordinate_block(1, offset), coordinate_block(2, offset),
                                    coordinate_block(4, offset));
}

ElementSet canonical_center() { return ElementSet::of(kGround, {8, 9, 10, 11, 12, 13, 14, 15}); }

std::string join_sets(const std::vector<ElementSet>& sets, const char* sep) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += sep;
    out += s.to_string();
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class Map>
std::string histogram(const Map& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out;
}

int slot_index(const SlotMap& map) {
  static const auto line_masks = [] {
    std::array<unsigned, 7> masks{};
    for (std::size_t i = 0; i < 7; ++i) {
      for (auto s : FanoPlane::slot_lines()[i]) masks[i] |= 1u << s;
    }
    return masks;
  }();
  int index = 0;
  for (unsigned line : line_masks) {
    unsigned image = 0;
    for (int s = 0; s < 7; ++s) {
      if (line & (1u << s)) image |= 1u << map[static_cast<std::size_t>(s)];
    }
    index += std::find(line_masks.begin(), line_masks.end(), image) != line_masks.end() ? 1 : 0;
  }
  return index;
}

void add_group_results(Report& r, const Design& d) {
  const PermGroup g = automorphism_group(d);
  r.result("automorphism_order", static_cast<long long>(g.order()));
  r.result("automorphism_generators", static_cast<long long>(g.generators().size()));
  r.result("block_orbits", static_cast<long long>(block_orbit_count(d, g)));
  r.result("flag_orbits", static_cast<long long>(flag_orbit_count(d, g)));
  const auto action = point_action_report(g);
  r.result("point_orbits", static_cast<long long>(action.point_orbits));
  if (action.transitive) {
    std::string sizes;
    for (auto s : action.block_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
    r.result("point_primitive", yes_no(action.primitive));
    if (!action.primitive) r.result("minimal_block_sizes", sizes);
  }
}

}  // namespace

const std::vector<std::string>& construct_kinds() {
  static const std::vector<std::string> kinds = {"c1", "c2", "c3", "c4", "non-centered",
                                                 "hyperplane-complement"};
  return kinds;
}

Clique construct_clique(std::string_view kind) {
  if (kind == "hyperplane-complement") return hyperplane_complement_clique(4);
  if (kind == "non-centered") return non_centered_clique();
  static const std::map<std::string_view, int> index = {{"c1", 7}, {"c2", 3}, {"c3", 1}, {"c4", 0}};
  const auto it = index.find(kind);
  if (it == index.end()) throw InvalidArgument("unknown kind '" + std::string(kind) + "'");
  return product_clique(canonical_center(),
                        representative_of_index(canonical_plane(0), canonical_plane(8), it->second));
}

ConstructOutput cmd_construct(std::string_view kind, HadamardStyle style) {
  Clique clique = construct_clique(kind);
  Design design = design_from_clique(clique);
  HadamardMatrix hadamard = to_hadamard(design);
  const CliqueClass cls = classify_clique(clique);

  Report r;
  r.command = "construct";
  r.param("kind", std::string(kind));
  r.result("tag", to_string(cls.tag));
  if (cls.bijection_index) r.result("bijection_index", *cls.bijection_index);
  r.result("center_count", static_cast<long long>(cls.centers.size()));
  r.result("centers", join_sets(cls.centers, " "));
  r.result("lines_inside", static_cast<long long>(cls.line_count));
  r.result("points", join_sets(clique.points(), "\n"));
  r.result("incidence", format_incidence(design));
  r.result("hadamard", format_hadamard(hadamard, style));
  return {std::move(clique), std::move(design), std::move(hadamard), std::move(r)};
}

Report cmd_classify(const Design& d, const std::string& source) {
  Report r;
  r.command = "classify";
  r.param("input", source);
  r.result("v", d.v());
  if (d.v() == kGround) {
    const CliqueClass cls = classify_clique(d.to_clique());
    r.result("tag", to_string(cls.tag));
    r.result("center_count", static_cast<long long>(cls.centers.size()));
    r.result("centers", join_sets(cls.centers, " "));
    if (cls.chosen_center) r.result("decomposed_at", cls.chosen_center->to_string());
    if (cls.bijection_index) r.result("bijection_index", *cls.bijection_index);
    r.result("lines_inside", static_cast<long long>(cls.line_count));
    r.result("planes_inside", static_cast<long long>(cls.planes.size()));
  } else {
    r.result("tag", "n/a");
  }
  add_group_results(r, d);
  return r;
}

Report cmd_isomorphic(const Design& a, const Design& b, const std::string& name_a,
                      const std::string& name_b) {
  Report r;
  r.command = "isomorphic";
  r.param("a", name_a);
  r.param("b", name_b);
  SearchStats stats;
  const auto witness = find_isomorphism(a, b, &stats);
  r.result("isomorphic", yes_no(witness.has_value()));
  if (witness) {
    if (!a.maps_onto(*witness, b)) throw InconsistencyError("witness does not map blocks onto blocks");
    r.result("witness", witness->to_cycle_string());
    r.result("witness_images", witness->to_string());
  } else {
    r.result("search", "exhausted");
  }
  r.result("search_nodes", static_cast<long long>(stats.nodes));
  return r;
}

Report cmd_census(const CensusOptions& options) {
  const ElementSet center = options.center.value_or(canonical_center());
  if (center.ground_size() != kGround || center.size() != 8) {
    throw InvalidArgument("center must be an 8-subset of [15]");
  }
  const ElementSet z = options.z.value_or(default_z(center));
  if (!z.is_subset_of(center) || z.size() != 7) throw InvalidArgument("Z must be a 7-subset of the center");
  if (options.planes == 0) throw InvalidArgument("planes must be positive");

  auto x_planes = fano_planes_on(complement_in(center, ElementSet::full(kGround)));
  auto y_planes = fano_planes_on(z);
  x_planes.resize(std::min(x_planes.size(), options.planes), x_planes.front());
  y_planes.resize(std::min(y_planes.size(), options.planes), y_planes.front());

  using Key = std::array<std::uint16_t, 15>;
  std::vector<Key> keys;
  keys.reserve(x_planes.size() * y_planes.size() * 5040);
  std::map<int, std::uint64_t> tally;
  std::map<int, std::map<std::size_t, std::uint64_t>> centers_by_index;
  std::uint64_t singular_index7 = 0;
  const std::uint16_t o_bits = static_cast<std::uint16_t>(center.bits());

  SlotMap map = identity_slots();
  bool first_pair = true;
  for (const auto& xp : x_planes) {
    for (const auto& yp : y_planes) {
      std::sort(map.begin(), map.end());
      do {
        const int index = slot_index(map);
        ++tally[index];
        Key key;
        for (std::size_t s = 0; s < 7; ++s) {
          const auto x = static_cast<std::uint16_t>(xp.point(static_cast<int>(s)).bits());
          const auto y = static_cast<std::uint16_t>(yp.point(map[s]).bits());
          key[s] = static_cast<std::uint16_t>(x | y);
          key[s + 7] = static_cast<std::uint16_t>(x | (o_bits & ~y));
        }
        key[14] = o_bits;
        std::sort(key.begin(), key.end());
        if (index == 7) {
          bool closed = true;
          for (std::size_t i = 0; i < 15 && closed; ++i) {
            for (std::size_t j = i + 1; j < 15 && closed; ++j) {
              closed = std::binary_search(key.begin(), key.end(), static_cast<std::uint16_t>(key[i] ^ key[j]));
            }
          }
          if (!closed) throw InconsistencyError("index-7 product is not a singular subspace");
          ++singular_index7;
        }
        if (first_pair) {
          // Cross-check the fast path against the library on one plane pair.
          const FanoBijection delta{xp, yp, map};
          if (bijection_index(delta) != index) throw InconsistencyError("census index disagrees with bijection_index");
          const Clique c = product_clique(center, delta);
          std::vector<ElementSet> pts = c.sorted_points();
          for (std::size_t i = 0; i < 15; ++i) {
            if (pts[i].bits() != key[i]) throw InconsistencyError("census product disagrees with product_clique");
          }
          ++centers_by_index[index][center_points(c).size()];
        }
        keys.push_back(key);
      } while (std::next_permutation(map.begin(), map.end()));
      first_pair = false;
    }
  }
  std::sort(keys.begin(), keys.end());
  const auto distinct = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  const std::uint64_t expected = x_planes.size() * y_planes.size() * 5040;
  if (distinct != expected) {
    throw InconsistencyError("census found " + std::to_string(distinct) + " distinct products, expected " +
                             std::to_string(expected));
  }

  Report r;
  r.command = "census";
  r.param("center", center.to_string());
  r.param("z", z.to_string());
  r.param("planes", std::to_string(options.planes));
  r.result("x_planes", static_cast<long long>(x_planes.size()));
  r.result("y_planes", static_cast<long long>(y_planes.size()));
  r.result("products", static_cast<long long>(expected));
  r.result("distinct_cliques", static_cast<long long>(distinct));
  r.result("index_tally", histogram(tally));
  for (int index : {7, 3, 1, 0}) {
    r.result("class_" + to_string(tag_for_index(index)), static_cast<long long>(tally[index]));
  }
  r.result("index7_singular", static_cast<long long>(singular_index7));
  for (const auto& [index, counts] : centers_by_index) {
    r.result("center_counts_index_" + std::to_string(index), histogram(counts));
  }
  return r;
}

Report cmd_enumerate(const EnumerateCommandOptions& options) {
  const Geometry geometry(GeometryParams::from_k(options.k));
  const CollinearityGraph graph = build_graph(geometry);
  EnumerationOptions eo;
  eo.limit = options.limit;
  eo.through_vertex = options.through;
  eo.min_size = options.min_size;
  if (options.through && *options.through >= graph.size()) throw InvalidArgument("through vertex out of range");

  std::vector<std::vector<std::size_t>> found;
  enumerate_maximal_cliques(graph, eo, [&](std::span<const std::size_t> vs) {
    found.emplace_back(vs.begin(), vs.end());
    return true;
  });
  if (options.sorted) std::sort(found.begin(), found.end());

  Report r;
  r.command = "enumerate";
  r.param("k", std::to_string(options.k));
  if (options.through) r.param("through", geometry.point(*options.through).to_string());
  if (options.limit) r.param("limit", std::to_string(*options.limit));
  r.param("min_size", std::to_string(options.min_size));
  r.result("points", static_cast<long long>(graph.size()));
  r.result("degree", static_cast<long long>(graph.size() ? graph.degree(0) : 0));
  r.result("cliques", static_cast<long long>(found.size()));

  std::map<std::size_t, std::uint64_t> sizes;
  std::map<std::string, std::uint64_t> tags;
  std::size_t singular = 0;
  std::string listing;
  for (const auto& vs : found) {
    const Clique c = graph.clique_of(vs);
    ++sizes[c.size()];
    singular += geometry.is_singular_subspace(c.points()) ? 1 : 0;
    if (options.k == 4 && c.size() == static_cast<std::size_t>(kGround)) ++tags[to_string(classify_clique(c).tag)];
    if (!listing.empty()) listing += '\n';
    listing += join_sets(c.sorted_points(), " ");
  }
  r.result("size_histogram", histogram(sizes));
  r.result("singular", static_cast<long long>(singular));
  if (!tags.empty()) {
    std::string t;
    for (const auto& [tag, count] : tags) t += (t.empty() ? "" : " ") + tag + ":" + std::to_string(count);
    r.result("tags", t);
  }
  r.result("listing", listing);
  return r;
}

RelabelOutput cmd_relabel(const Design& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Permutation p = Permutation::random(d.v(), rng);
  Design relabelled = d.relabel(p);
  Report r;
  r.command = "relabel";
  r.param("seed", std::to_string(seed));
  r.result("permutation", p.to_cycle_string());
  r.result("incidence", format_incidence(relabelled));
  return {std::move(p), std::move(relabelled), std::move(r)};
}

Report cmd_fano_spectrum() {
  const FanoPlane x = canonical_plane(0);
  const FanoPlane y = canonical_plane(8);
  const auto all = all_bijections(x, y);
  std::map<int, std::uint64_t> tally;
  std::vector<int> index(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[i] = bijection_index(all[i]);
    ++tally[index[i]];
  }
  const BijectionPartition partition = partition_bijections(x, y);
  bool agree = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    agree = agree && partition.class_index[static_cast<std::size_t>(partition.class_of[i])] == index[i];
  }
  std::map<int, int> classes_per_index;
  for (int ci : partition.class_index) ++classes_per_index[ci];
  for (const auto& [idx, count] : classes_per_index) {
    agree = agree && count == 1;
  }
  if (!agree) throw InconsistencyError("bijection classes do not match index values");

  Report r;
  r.command = "fano-spectrum";
  r.param("source", join_sets({x.points().begin(), x.points().end()}, " "));
  r.param("target", join_sets({y.points().begin(), y.points().end()}, " "));
  r.result("bijections", static_cast<long long>(all.size()));
  r.result("index_tally", histogram(tally));
  r.result("automorphisms", static_cast<long long>(x.automorphisms().size()));
  r.result("classes", partition.class_count);
  r.result("classes_match_index", yes_no(agree));
  return r;
}

ElementSet parse_element_list(std::string_view text, int ground) {
  std::vector<int> elements;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad element '" + token + "'");
    }
    if (used != token.size() || value < 1 || value > ground) throw ParseError("bad element '" + token + "'");
    elements.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (bits & (std::uint64_t{1} << e)) throw ParseError("repeated element " + std::to_string(e));
    bits |= std::uint64_t{1} << e;
  }
  return ElementSet(ground, bits);
}

}  // namespace pgeom
