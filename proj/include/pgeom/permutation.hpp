#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pgeom/element_set.hpp"

namespace pgeom {

/// A bijection of {1, ..., n}.
///
/// Composition convention (the only one used in this library): products read
/// left to right, so `(p * q)(x) == q(p(x))`, i.e. apply p first, then q.
/// Group code, orbit code and the Fano module all build on this operator.
class Permutation {
 public:
  Permutation() = default;
  /// images[i] is the image of element i + 1. Throws InvalidArgument unless
  /// the images are exactly 1..n in some order.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int n);
  /// Transposition (a b) on {1..n}.
  static Permutation transposition(int n, int a, int b);
  static Permutation random(int n, std::mt19937_64& rng);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Apply p first, then q.
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  /// Cycle notation, e.g. `(1 2)(3 5 4)`; identity prints as `()`.
  std::string to_cycle_string() const;
  /// One-line notation `[2,1,3,...]`.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// { p(i) : i in a }. Throws InvalidArgument if degrees differ.
ElementSet apply(const Permutation& p, const ElementSet& a);

}  // namespace pgeom
