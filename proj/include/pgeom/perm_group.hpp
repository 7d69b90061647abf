#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgeom/permutation.hpp"

namespace pgeom {

/// Permutation group on {1..degree} given by generators, with a base and
/// strong generating set built by Schreier–Sims.
class PermGroup {
 public:
  /// Trivial group.
  explicit PermGroup(int degree);
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  /// Basic orbit lengths along the base; their product is the order.
  std::vector<std::size_t> basic_orbit_sizes() const;
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  /// Every element, in a deterministic order. Throws InvalidArgument if the
  /// order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = 10'000'000) const;

  /// Orbits on points, each ascending, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }

  /// For a transitive group: the distinct non-trivial block systems that are
  /// minimal with respect to containing {1, q} for some q. Empty means the
  /// action is primitive. Throws InvalidArgument if not transitive.
  std::vector<std::vector<std::vector<int>>> minimal_block_systems() const;
  bool is_primitive() const { return is_transitive() && minimal_block_systems().empty(); }

 private:
  struct Level {
    int base_point = 0;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> transversal;  // indexed by point
  };

  void schreier_sims();
  void build_levels();
  Permutation sift(Permutation h, std::size_t from_level) const;
  std::vector<Permutation> level_generators(std::size_t level) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

}  // namespace pgeom
