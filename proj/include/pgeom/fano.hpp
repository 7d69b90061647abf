#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgeom/element_set.hpp"
#include "pgeom/geometry.hpp"

namespace pgeom {

/// Map between the seven slots of two Fano planes: slot s goes to slot
/// map[s]. Slots are 0..6.
using SlotMap = std::array<std::uint8_t, 7>;

/// Apply a first, then b (same left-to-right convention as Permutation).
SlotMap then(const SlotMap& a, const SlotMap& b);
SlotMap inverse(const SlotMap& a);
SlotMap identity_slots();

/// A Fano plane realised as seven mutually collinear sets closed under △.
///
/// Points are stored by coordinate: slot s holds the point with coordinate
/// vector v = s + 1 over the generators (a, b, c), i.e.
///
///   slot: 0   1   2     3   4     5     6
///   v   : 1   2   3     4   5     6     7
///   name: P1  P2  P12   P3  P13   P23   P123
///
/// so the lines are exactly the slot triples {u-1, v-1, (u^v)-1}.
class FanoPlane {
 public:
  /// Plane spanned by three non-collinear points (a, b, c) = (P1, P2, P3).
  static FanoPlane from_generators(const ElementSet& a, const ElementSet& b, const ElementSet& c);
  /// Plane on exactly these seven points; generators are chosen as the two
  /// smallest points and the smallest point off their line. Throws
  /// InvalidArgument if the points do not form a plane.
  static FanoPlane from_points(std::span<const ElementSet> points);

  const std::array<ElementSet, 7>& points() const { return points_; }
  const ElementSet& point(int slot) const { return points_[static_cast<std::size_t>(slot)]; }
  std::optional<int> slot_of(const ElementSet& p) const;
  bool contains(const ElementSet& p) const { return slot_of(p).has_value(); }

  /// The seven lines, as slot triples and as point lines.
  static const std::array<std::array<std::uint8_t, 3>, 7>& slot_lines();
  std::vector<Line> lines() const;

  /// Union of the points (the 7-element ground set for 4-subset planes).
  ElementSet support() const;

  /// The 168 collineations as slot maps, generated by extending each ordered
  /// simplex to the unique collineation sending the base simplex
  /// {P1, P2, P3, P123} onto it.
  const std::vector<SlotMap>& automorphisms() const { return automorphisms_; }

  /// Same point set (labelling may differ).
  bool same_points(const FanoPlane& other) const;

 private:
  FanoPlane() = default;
  std::array<ElementSet, 7> points_;
  std::vector<SlotMap> automorphisms_;
};

/// Four slots of which no three are on a line; equivalently the complement
/// is a line.
bool is_simplex(std::span<const int> slots);
/// Same predicate on points of `plane`; throws if a point is not in it or
/// the four points are not distinct.
bool is_simplex(const FanoPlane& plane, std::span<const ElementSet> four);
/// Complement-is-a-line form of the same test, kept separate for testing.
bool complement_is_line(std::span<const int> slots);

/// All Fano planes formed by 4-subsets of a 7-element ground set, i.e. the
/// maximal cliques of the collinearity graph of that sub-geometry.
std::vector<FanoPlane> fano_planes_on(const ElementSet& ground);

/// Point bijection between two planes.
struct FanoBijection {
  FanoPlane source;
  FanoPlane target;
  SlotMap map;  // source slot -> target slot

  ElementSet operator()(const ElementSet& p) const;
};

int bijection_index(const FanoBijection& d);

/// All 7! bijections source -> target, slot maps in lexicographic order.
std::vector<FanoBijection> all_bijections(const FanoPlane& source, const FanoPlane& target);

/// Search for collineations g1 of the source and g2 of the target with
/// d2 = g1 * d1 * g2 (g1 first). Returns the pair if found.
std::optional<std::pair<SlotMap, SlotMap>> find_equivalence(const FanoBijection& d1,
                                                            const FanoBijection& d2);

/// Conjugation search, cross-checked against index equality. Throws
/// InconsistencyError if the two routes disagree.
bool are_equivalent(const FanoBijection& d1, const FanoBijection& d2);

/// Canonical bijection of index 7, 3, 1 or 0 built from the slot labelling:
///   7: identity
///   3: fixes the simplex {P1,P2,P3,P123}, swaps P12 <-> P13
///   1: fixes the simplex, cycles P12 -> P13 -> P23 -> P12
///   0: fixes P1,P2,P3, cycles P123 -> P23 -> P12 -> P13 -> P123
/// Throws InvalidArgument for any other index.
FanoBijection representative_of_index(const FanoPlane& source, const FanoPlane& target, int index);

/// Partition of all 5040 bijections source -> target into equivalence
/// classes by orbit search. class_of[i] refers to all_bijections()[i].
struct BijectionPartition {
  std::vector<int> class_of;
  std::vector<int> class_index;  // index value shared by each class
  int class_count = 0;
};
BijectionPartition partition_bijections(const FanoPlane& source, const FanoPlane& target);

}  // namespace pgeom
