#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pgeom/design.hpp"
#include "pgeom/perm_group.hpp"
#include "pgeom/permutation.hpp"

namespace pgeom {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// A point permutation p with p(B) a block of d2 for every block B of d1, or
/// nullopt. Designs with different v never match.
std::optional<Permutation> find_isomorphism(const Design& d1, const Design& d2,
                                            SearchStats* stats = nullptr);

/// Calls `visit` for every isomorphism d1 -> d2 until it returns false.
/// `forced` pins point images (x -> y) before the search starts. Returns
/// the number of isomorphisms visited.
std::uint64_t for_each_isomorphism(const Design& d1, const Design& d2,
                                   const std::vector<std::pair<int, int>>& forced,
                                   const std::function<bool(const Permutation&)>& visit,
                                   SearchStats* stats = nullptr);

/// Automorphisms counted one by one; nullopt once the count passes `cap`.
std::optional<std::uint64_t> count_automorphisms(const Design& d, std::uint64_t cap);

/// Full automorphism group. The order from the stabilizer chain is checked
/// against Schreier–Sims on the found generators, and against direct
/// enumeration when it is at most 10^6; a mismatch throws
/// InconsistencyError.
PermGroup automorphism_group(const Design& d);

/// Orbits of g on blocks / on incident (point, block) pairs. Throws
/// InvalidArgument if some generator does not preserve d.
std::size_t block_orbit_count(const Design& d, const PermGroup& g);
std::size_t flag_orbit_count(const Design& d, const PermGroup& g);

/// Descriptive point action summary of a group.
struct PointActionReport {
  std::size_t point_orbits = 0;
  bool transitive = false;
  bool primitive = false;
  /// Block sizes of the minimal non-trivial block systems, ascending.
  std::vector<std::size_t> block_sizes;
};
PointActionReport point_action_report(const PermGroup& g);

}  // namespace pgeom
