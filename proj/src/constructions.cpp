#include "pgeom/constructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "pgeom/geometry.hpp"

namespace pgeom {

namespace {

// Checks that `part` is a (2m-1)-clique of m-subsets of `universe`.
void require_half_clique(std::span<const ElementSet> part, const ElementSet& universe, int m,
                         const char* what) {
  if (part.size() != static_cast<std::size_t>(2 * m - 1)) {
    throw InvalidArgument(std::string(what) + " must have " + std::to_string(2 * m - 1) +
                          " points, got " + std::to_string(part.size()));
  }
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i].size() != m || !part[i].is_subset_of(universe)) {
      throw InvalidArgument(std::string(what) + " point " + part[i].to_string() + " is not an " +
                            std::to_string(m) + "-subset of " + universe.to_string());
    }
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      if (!collinear_sets(part[i], part[j])) {
        throw InvalidArgument(std::string(what) + " is not a clique: " + part[i].to_string() +
                              " and " + part[j].to_string());
      }
    }
  }
}

int half_of_center(const ElementSet& center) {
  const int n = center.ground_size();
  const int two_m = center.size();
  if (two_m % 4 != 0 || n != 2 * two_m - 1) {
    throw InvalidArgument("center " + center.to_string() + " must have size 2m with n = 4m - 1, m even");
  }
  return two_m / 2;
}

}  // namespace

FanoBijection CenteredDecomposition::fano_bijection() const {
  if (x_part.size() != 7) throw InvalidArgument("Fano bijection needs seven-point parts (k = 4)");
  FanoPlane source = FanoPlane::from_points(x_part);
  FanoPlane target = FanoPlane::from_points(y_part);
  SlotMap map{};
  for (std::size_t i = 0; i < x_part.size(); ++i) {
    map[static_cast<std::size_t>(*source.slot_of(x_part[i]))] =
        static_cast<std::uint8_t>(*target.slot_of(images[i]));
  }
  return FanoBijection{std::move(source), std::move(target), map};
}

Clique product_clique(const ElementSet& center, std::span<const ElementSet> x_part,
                      std::span<const ElementSet> y_part, std::span<const std::size_t> delta) {
  const int m = half_of_center(center);
  const int n = center.ground_size();
  const ElementSet outside = complement_in(center, ElementSet::full(n));
  require_half_clique(x_part, outside, m, "X");

  ElementSet z = ElementSet::empty(n);
  for (const auto& y : y_part) z = set_union(z, y);
  if (z.size() != 2 * m - 1 || !z.is_subset_of(center)) {
    throw InvalidArgument("Y must live on a " + std::to_string(2 * m - 1) + "-subset of the center");
  }
  require_half_clique(y_part, z, m, "Y");

  if (delta.size() != x_part.size()) throw InvalidArgument("delta must be defined on all of X");
  std::vector<bool> hit(y_part.size(), false);
  for (auto d : delta) {
    if (d >= y_part.size() || hit[d]) throw InvalidArgument("delta is not a bijection X -> Y");
    hit[d] = true;
  }

  std::vector<ElementSet> points;
  points.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < x_part.size(); ++i) points.push_back(set_union(x_part[i], y_part[delta[i]]));
  points.push_back(center);
  for (std::size_t i = 0; i < x_part.size(); ++i) {
    points.push_back(set_union(x_part[i], complement_in(y_part[delta[i]], center)));
  }
  Clique c(std::move(points));
  if (c.size() != static_cast<std::size_t>(n)) {
    throw InconsistencyError("product has " + std::to_string(c.size()) + " points, expected n");
  }
  return c;
}

Clique product_clique(const ElementSet& center, const FanoBijection& delta) {
  std::vector<ElementSet> x(delta.source.points().begin(), delta.source.points().end());
  std::vector<ElementSet> y(delta.target.points().begin(), delta.target.points().end());
  std::vector<std::size_t> d(delta.map.begin(), delta.map.end());
  return product_clique(center, x, y, d);
}

ElementSet default_z(const ElementSet& center) { return center.without(center.max_element()); }

CenteredDecomposition decompose(const Clique& c, const ElementSet& center, const ElementSet& z) {
  const int m = half_of_center(center);
  if (!c.contains(center)) throw InvalidArgument(center.to_string() + " is not in the clique");
  const std::unordered_set<ElementSet> members(c.points().begin(), c.points().end());
  for (const auto& p : c.points()) {
    if (p != center && !members.contains(symdiff(center, p))) {
      throw InvalidArgument(center.to_string() + " is not a center point of the clique");
    }
  }
  if (z.size() != 2 * m - 1 || !z.is_subset_of(center)) {
    throw InvalidArgument("Z must be a " + std::to_string(2 * m - 1) + "-subset of the center");
  }

  CenteredDecomposition d;
  d.center = center;
  d.z = z;
  const ElementSet outside = complement_in(center, ElementSet::full(center.ground_size()));
  for (const auto& p : c.points()) {
    if (p == center) continue;
    const ElementSet inner = intersection(p, center);
    if (!inner.is_subset_of(z)) continue;
    d.x_part.push_back(intersection(p, outside));
    d.images.push_back(inner);
    d.plus_half.push_back(p);
    d.minus_half.push_back(symdiff(p, center));
  }
  d.y_part = d.images;
  std::sort(d.y_part.begin(), d.y_part.end());
  require_half_clique(d.x_part, outside, m, "X");
  require_half_clique(d.y_part, z, m, "Y");
  return d;
}

CenteredDecomposition decompose(const Clique& c, const ElementSet& center) {
  return decompose(c, center, default_z(center));
}

Clique hyperplane_complement_clique(int k) {
  if (k < 3 || k > 6) throw InvalidArgument("hyperplane complements need k in [3, 6]");
  const int n = (1 << k) - 1;
  std::vector<ElementSet> blocks;
  for (int h = 1; h <= n; ++h) {
    std::uint64_t bits = 0;
    for (int j = 1; j <= n; ++j) {
      if (std::popcount(static_cast<unsigned>(h & j)) % 2 == 1) bits |= std::uint64_t{1} << j;
    }
    blocks.emplace_back(n, bits);
  }
  return Clique(std::move(blocks));
}

int signed_label(int signed_element) {
  if (signed_element < -7 || signed_element > 7) {
    throw InvalidArgument("signed label must be in [-7, 7]");
  }
  return signed_element + 8;
}

ElementSet signed_set(std::initializer_list<int> signed_elements) {
  std::vector<int> labels;
  for (int e : signed_elements) labels.push_back(signed_label(e));
  return ElementSet::of(15, labels);
}

ElementSet plus_minus(std::initializer_list<int> indices) {
  std::vector<int> labels;
  for (int i : indices) {
    labels.push_back(signed_label(i));
    labels.push_back(signed_label(-i));
  }
  return ElementSet::of(15, labels);
}

ElementSet n_point(int i, int j) {
  if (i == j || i < 1 || i > 6 || j < 1 || j > 6) throw InvalidArgument("N_ij needs distinct i, j in [6]");
  std::vector<int> labels = {signed_label(0), signed_label(i), signed_label(j), signed_label(7)};
  for (int t = 1; t <= 6; ++t) {
    if (t != i && t != j) labels.push_back(signed_label(-t));
  }
  return ElementSet::of(15, labels);
}

ElementSet m_point(int i, int j, int t) {
  if (i == j || i == t || j == t || std::min({i, j, t}) < 1 || std::max({i, j, t}) > 6) {
    throw InvalidArgument("M_ijt needs distinct i, j, t in [6]");
  }
  std::vector<int> labels = {signed_label(-7), signed_label(0), signed_label(i), signed_label(j),
                             signed_label(t)};
  for (int s = 1; s <= 6; ++s) {
    if (s != i && s != j && s != t) labels.push_back(signed_label(-s));
  }
  return ElementSet::of(15, labels);
}

NonCenteredParts non_centered_parts() {
  NonCenteredParts parts;
  const ElementSet x1 = plus_minus({1, 2, 3, 4});
  const ElementSet x2 = plus_minus({1, 2, 5, 6});
  const ElementSet x3 = plus_minus({3, 4, 5, 6});
  const ElementSet x = plus_minus({1, 3, 5, 7});
  parts.plane = {x1, x2, x3, x, symdiff(x, x1), symdiff(x, x2), symdiff(x, x3)};
  parts.y = signed_set({0, 1, 2, 3, 4, 5, 6, 7});
  parts.nm_points = {n_point(1, 3),    n_point(2, 5),    n_point(4, 6),   m_point(1, 2, 4),
                     m_point(1, 5, 6), m_point(2, 3, 6), m_point(3, 4, 5)};
  for (const auto& p : parts.nm_points) parts.deleted_plane.push_back(symdiff(parts.y, p));

  const Geometry g = build_geometry(GeometryParams::from_k(4));
  std::vector<ElementSet> generators = parts.deleted_plane;
  generators.push_back(parts.y);
  parts.singular = g.singular_span(generators);
  return parts;
}

Clique non_centered_clique() {
  const NonCenteredParts parts = non_centered_parts();
  std::vector<ElementSet> points = parts.plane;
  const std::unordered_set<ElementSet> deleted(parts.deleted_plane.begin(), parts.deleted_plane.end());
  // (S \ F'), listed as Y then the N/M points, which is what remains.
  std::vector<ElementSet> remaining;
  for (const auto& p : parts.singular) {
    if (!deleted.contains(p)) remaining.push_back(p);
  }
  std::vector<ElementSet> expected = parts.nm_points;
  expected.push_back(parts.y);
  std::sort(expected.begin(), expected.end());
  if (remaining != expected) {
    throw InconsistencyError("S minus F' is not {Y} together with the N/M points");
  }
  points.push_back(parts.y);
  points.insert(points.end(), parts.nm_points.begin(), parts.nm_points.end());
  return Clique(std::move(points));
}

}  // namespace pgeom
