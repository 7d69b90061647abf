#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pgeom/element_set.hpp"

namespace pgeom {

/// Simplex-code parameters: m = 2^(k-2), n = 4m - 1 = 2^k - 1.
struct GeometryParams {
  int k = 0;
  int m = 0;
  int n = 0;

  /// k in [2, 6] (n must fit in one word).
  static GeometryParams from_k(int k);
  /// Validates a full triple; throws InvalidArgument if inconsistent.
  static GeometryParams checked(int k, int m, int n);

  int point_size() const { return 2 * m; }
  friend bool operator==(const GeometryParams&, const GeometryParams&) = default;
};

/// Three points closed under symmetric difference, stored ascending.
struct Line {
  std::array<ElementSet, 3> points;

  bool contains(const ElementSet& p) const {
    return points[0] == p || points[1] == p || points[2] == p;
  }
  friend auto operator<=>(const Line&, const Line&) = default;
};

Line make_line(const ElementSet& a, const ElementSet& b, const ElementSet& c);

/// Two equal-size sets of even size 2t are collinear iff they are distinct
/// and meet in exactly t elements. Roster-free form used by sub-geometries.
bool collinear_sets(const ElementSet& x, const ElementSet& y);

/// The geometry of all 2m-element subsets of [n]. Points are kept in
/// ascending bitmask order; index_of() is the inverse of point().
class Geometry {
 public:
  explicit Geometry(GeometryParams params);

  const GeometryParams& params() const { return params_; }
  int ground_size() const { return params_.n; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ElementSet>& points() const { return points_; }
  const ElementSet& point(std::size_t i) const { return points_[i]; }

  std::optional<std::size_t> find(const ElementSet& p) const;
  /// Throws InvalidArgument if p is not a point of this geometry.
  std::size_t index_of(const ElementSet& p) const;
  bool contains(const ElementSet& p) const { return find(p).has_value(); }

  /// |x ∩ y| = m for distinct points; false when x == y.
  bool is_collinear(const ElementSet& x, const ElementSet& y) const;
  /// {x, y, x △ y}; throws InvalidArgument if x, y are not collinear.
  Line line_through(const ElementSet& x, const ElementSet& y) const;

  bool is_subspace(std::span<const ElementSet> s) const;
  bool is_singular_subspace(std::span<const ElementSet> s) const;

  /// Smallest singular subspace containing s, by worklist closure under △.
  /// Throws InvalidArgument if s is not pairwise collinear or the closure
  /// leaves the set of pairwise-collinear points of the geometry.
  std::vector<ElementSet> singular_span(std::span<const ElementSet> s) const;

 private:
  void require_point(const ElementSet& p) const;

  GeometryParams params_;
  std::vector<ElementSet> points_;
};

Geometry build_geometry(const GeometryParams& params);

}  // namespace pgeom
