#include "pgeom/fano.hpp"

#include <algorithm>
#include <numeric>

#include "pgeom/cliques.hpp"

namespace pgeom {

namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 7> kSlotLines = {{
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5},
}};

// Base simplex is {P1, P2, P3, P123} = slots {0, 1, 3, 6}.
constexpr int kP123 = 6;

bool slot_line(int a, int b, int c) {
  return ((a + 1) ^ (b + 1)) == (c + 1) && a != b;
}

int permutation_rank(const SlotMap& m) {
  // Lehmer code; lexicographic rank among all 7! slot maps.
  int rank = 0;
  for (int i = 0; i < 7; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 7; ++j) smaller += m[static_cast<std::size_t>(j)] < m[static_cast<std::size_t>(i)];
    rank = rank * (7 - i) + smaller;
  }
  return rank;
}

}  // namespace

SlotMap then(const SlotMap& a, const SlotMap& b) {
  SlotMap r{};
  for (std::size_t s = 0; s < 7; ++s) r[s] = b[a[s]];
  return r;
}

SlotMap inverse(const SlotMap& a) {
  SlotMap r{};
  for (std::size_t s = 0; s < 7; ++s) r[a[s]] = static_cast<std::uint8_t>(s);
  return r;
}

SlotMap identity_slots() {
  SlotMap r{};
  std::iota(r.begin(), r.end(), std::uint8_t{0});
  return r;
}

const std::array<std::array<std::uint8_t, 3>, 7>& FanoPlane::slot_lines() { return kSlotLines; }

FanoPlane FanoPlane::from_generators(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
  if (!collinear_sets(a, b) || !collinear_sets(a, c) || !collinear_sets(b, c)) {
    throw InvalidArgument("Fano generators must be pairwise collinear");
  }
  if (symdiff(a, b) == c) throw InvalidArgument("Fano generators must not lie on a line");
  FanoPlane f;
  const std::array<ElementSet, 3> gens = {a, b, c};
  for (int v = 1; v <= 7; ++v) {
    ElementSet p = ElementSet::empty(a.ground_size());
    for (int bit = 0; bit < 3; ++bit) {
      if (v & (1 << bit)) p = symdiff(p, gens[static_cast<std::size_t>(bit)]);
    }
    f.points_[static_cast<std::size_t>(v - 1)] = p;
  }
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      if (!collinear_sets(f.points_[i], f.points_[j])) {
        throw InvalidArgument("generators do not span a Fano plane of the geometry: " +
                              f.points_[i].to_string() + " and " + f.points_[j].to_string() +
                              " are not collinear");
      }
    }
  }

  // Collineations: send the base simplex, in order, onto every ordered
  // simplex. Simplices are the complements of lines.
  f.automorphisms_.reserve(168);
  for (const auto& line : kSlotLines) {
    std::array<std::uint8_t, 4> simplex{};
    std::size_t k = 0;
    for (std::uint8_t s = 0; s < 7; ++s) {
      if (s != line[0] && s != line[1] && s != line[2]) simplex[k++] = s;
    }
    std::sort(simplex.begin(), simplex.end());
    do {
      const FanoPlane& self = f;
      const ElementSet ga = self.point(simplex[0]);
      const ElementSet gb = self.point(simplex[1]);
      const ElementSet gc = self.point(simplex[2]);
      SlotMap g{};
      for (int v = 1; v <= 7; ++v) {
        ElementSet image = ElementSet::empty(a.ground_size());
        if (v & 1) image = symdiff(image, ga);
        if (v & 2) image = symdiff(image, gb);
        if (v & 4) image = symdiff(image, gc);
        g[static_cast<std::size_t>(v - 1)] = static_cast<std::uint8_t>(*self.slot_of(image));
      }
      if (g[kP123] != simplex[3]) {
        throw InconsistencyError("simplex extension does not fix the fourth simplex point");
      }
      f.automorphisms_.push_back(g);
    } while (std::next_permutation(simplex.begin(), simplex.end()));
  }
  return f;
}

FanoPlane FanoPlane::from_points(std::span<const ElementSet> points) {
  std::vector<ElementSet> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != 7 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("a Fano plane needs exactly seven distinct points");
  }
  const ElementSet a = sorted[0];
  const ElementSet b = sorted[1];
  const ElementSet ab = symdiff(a, b);
  auto c = std::find_if(sorted.begin() + 2, sorted.end(), [&](const ElementSet& p) { return p != ab; });
  FanoPlane f = from_generators(a, b, *c);
  std::vector<ElementSet> spanned(f.points_.begin(), f.points_.end());
  std::sort(spanned.begin(), spanned.end());
  if (spanned != sorted) throw InvalidArgument("points are not closed under symmetric difference");
  return f;
}

std::optional<int> FanoPlane::slot_of(const ElementSet& p) const {
  for (std::size_t s = 0; s < 7; ++s) {
    if (points_[s] == p) return static_cast<int>(s);
  }
  return std::nullopt;
}

std::vector<Line> FanoPlane::lines() const {
  std::vector<Line> out;
  for (const auto& l : kSlotLines) out.push_back(make_line(point(l[0]), point(l[1]), point(l[2])));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet FanoPlane::support() const {
  ElementSet u = ElementSet::empty(points_[0].ground_size());
  for (const auto& p : points_) u = set_union(u, p);
  return u;
}

bool FanoPlane::same_points(const FanoPlane& other) const {
  auto a = std::vector<ElementSet>(points_.begin(), points_.end());
  auto b = std::vector<ElementSet>(other.points_.begin(), other.points_.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_simplex(std::span<const int> slots) {
  if (slots.size() != 4) throw InvalidArgument("a simplex has four points");
  for (std::size_t i = 0; i < 4; ++i) {
    if (slots[i] < 0 || slots[i] > 6) throw InvalidArgument("slot out of range");
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (slots[i] == slots[j]) throw InvalidArgument("simplex points must be distinct");
      for (std::size_t k = j + 1; k < 4; ++k) {
        if (slot_line(slots[i], slots[j], slots[k])) return false;
      }
    }
  }
  return true;
}

bool is_simplex(const FanoPlane& plane, std::span<const ElementSet> four) {
  std::vector<int> slots;
  for (const auto& p : four) {
    auto s = plane.slot_of(p);
    if (!s) throw InvalidArgument(p.to_string() + " is not a point of the plane");
    slots.push_back(*s);
  }
  return is_simplex(slots);
}

bool complement_is_line(std::span<const int> slots) {
  std::array<bool, 7> in{};
  for (int s : slots) in[static_cast<std::size_t>(s)] = true;
  std::vector<int> rest;
  for (int s = 0; s < 7; ++s) {
    if (!in[static_cast<std::size_t>(s)]) rest.push_back(s);
  }
  return rest.size() == 3 && slot_line(rest[0], rest[1], rest[2]);
}

std::vector<FanoPlane> fano_planes_on(const ElementSet& ground) {
  if (ground.size() != 7) throw InvalidArgument("Fano planes need a 7-element ground set");
  CollinearityGraph graph(subsets_of_size(ground, 4));
  std::vector<FanoPlane> planes;
  enumerate_maximal_cliques(graph, {}, [&](std::span<const std::size_t> vs) {
    if (vs.size() != 7) {
      throw InconsistencyError("maximal clique of size " + std::to_string(vs.size()) +
                               " among 4-subsets of a 7-set");
    }
    std::vector<ElementSet> pts;
    for (auto v : vs) pts.push_back(graph.point(v));
    planes.push_back(FanoPlane::from_points(pts));
    return true;
  });
  return planes;
}

ElementSet FanoBijection::operator()(const ElementSet& p) const {
  auto s = source.slot_of(p);
  if (!s) throw InvalidArgument(p.to_string() + " is not in the source plane");
  return target.point(map[static_cast<std::size_t>(*s)]);
}

int bijection_index(const FanoBijection& d) {
  int index = 0;
  for (const auto& l : kSlotLines) {
    const ElementSet a = d.target.point(d.map[l[0]]);
    const ElementSet b = d.target.point(d.map[l[1]]);
    const ElementSet c = d.target.point(d.map[l[2]]);
    if (symdiff(a, b) == c) ++index;
  }
  return index;
}

std::vector<FanoBijection> all_bijections(const FanoPlane& source, const FanoPlane& target) {
  std::vector<FanoBijection> out;
  out.reserve(5040);
  SlotMap m = identity_slots();
  do {
    out.push_back(FanoBijection{source, target, m});
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

std::optional<std::pair<SlotMap, SlotMap>> find_equivalence(const FanoBijection& d1,
                                                            const FanoBijection& d2) {
  // Slot labellings make every plane's line set the same slot triples, so
  // isomorphisms between two planes are slot-identity composed with a
  // collineation; searching collineations in slot space covers them all.
  for (const auto& g1 : d1.source.automorphisms()) {
    const SlotMap first = then(g1, d1.map);
    for (const auto& g2 : d1.target.automorphisms()) {
      if (then(first, g2) == d2.map) return std::make_pair(g1, g2);
    }
  }
  return std::nullopt;
}

bool are_equivalent(const FanoBijection& d1, const FanoBijection& d2) {
  const bool by_search = find_equivalence(d1, d2).has_value();
  const bool by_index = bijection_index(d1) == bijection_index(d2);
  if (by_search != by_index) {
    throw InconsistencyError("conjugation search and index comparison disagree");
  }
  return by_search;
}

FanoBijection representative_of_index(const FanoPlane& source, const FanoPlane& target,
                                      int index) {
  // Slots: P1=0 P2=1 P12=2 P3=3 P13=4 P23=5 P123=6.
  SlotMap m = identity_slots();
  switch (index) {
    case 7:
      break;
    case 3:  // P12 <-> P13
      m[2] = 4;
      m[4] = 2;
      break;
    case 1:  // P12 -> P13 -> P23 -> P12
      m[2] = 4;
      m[4] = 5;
      m[5] = 2;
      break;
    case 0:  // P123 -> P23 -> P12 -> P13 -> P123
      m[6] = 5;
      m[5] = 2;
      m[2] = 4;
      m[4] = 6;
      break;
    default:
      throw InvalidArgument("bijection index must be 0, 1, 3 or 7, got " + std::to_string(index));
  }
  FanoBijection d{source, target, m};
  if (bijection_index(d) != index) {
    throw InconsistencyError("representative has index " + std::to_string(bijection_index(d)) +
                             ", expected " + std::to_string(index));
  }
  return d;
}

BijectionPartition partition_bijections(const FanoPlane& source, const FanoPlane& target) {
  BijectionPartition part;
  part.class_of.assign(5040, -1);
  const auto all = all_bijections(source, target);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (part.class_of[i] >= 0) continue;
    const int cls = part.class_count++;
    part.class_index.push_back(bijection_index(all[i]));
    for (const auto& g1 : source.automorphisms()) {
      const SlotMap first = then(g1, all[i].map);
      for (const auto& g2 : target.automorphisms()) {
        const int r = permutation_rank(then(first, g2));
        int& slot = part.class_of[static_cast<std::size_t>(r)];
        if (slot >= 0 && slot != cls) throw InconsistencyError("orbits overlap");
        slot = cls;
      }
    }
  }
  return part;
}

}  // namespace pgeom
