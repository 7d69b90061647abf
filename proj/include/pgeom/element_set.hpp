#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "pgeom/error.hpp"

namespace pgeom {

inline constexpr int kMaxGround = 63;

/// A subset of the ground set {1, ..., n}, n <= 63, stored as one machine
/// word. Element i lives at bit i; bit 0 is always clear.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  /// Throws InvalidArgument if `bits` has bit 0 or a bit above `ground` set.
  ElementSet(int ground, std::uint64_t bits);

  static ElementSet empty(int ground) { return ElementSet(ground, 0); }
  static ElementSet full(int ground);
  static ElementSet of(int ground, std::initializer_list<int> elements);
  static ElementSet of(int ground, const std::vector<int>& elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int ground_size() const { return ground_; }
  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int element) const {
    return element >= 1 && element <= ground_ && ((bits_ >> element) & 1U);
  }
  bool is_subset_of(const ElementSet& other) const;

  ElementSet with(int element) const;
  ElementSet without(int element) const;

  /// Elements in increasing order.
  std::vector<int> elements() const;
  /// Smallest / largest element; throws on the empty set.
  int min_element() const;
  int max_element() const;

  /// `{1,3,5}` notation.
  std::string to_string() const;

  // Ordering is by bitmask value, then ground size. This is the roster order
  // used throughout the library.
  friend constexpr auto operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.ground_ <=> b.ground_;
  }
  friend constexpr bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::uint64_t bits_ = 0;
  int ground_ = 0;
};

ElementSet symdiff(const ElementSet& a, const ElementSet& b);
ElementSet intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
int intersection_size(const ElementSet& a, const ElementSet& b);
/// universe \ a. Throws InvalidArgument unless a is a subset of universe.
ElementSet complement_in(const ElementSet& a, const ElementSet& universe);

/// All `size`-element subsets of `universe`, ascending bitmask order.
std::vector<ElementSet> subsets_of_size(const ElementSet& universe, int size);

}  // namespace pgeom

template <>
struct std::hash<pgeom::ElementSet> {
  std::size_t operator()(const pgeom::ElementSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(s.ground_size()));
  }
};
