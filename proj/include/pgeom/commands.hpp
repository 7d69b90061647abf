#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgeom/cliques.hpp"
#include "pgeom/design.hpp"
#include "pgeom/report.hpp"

namespace pgeom {

/// c1, c2, c3, c4, non-centered, hyperplane-complement.
const std::vector<std::string>& construct_kinds();

/// Canonical clique for a kind. The centered kinds are products at
/// O = {8..15} of the plane X = <X1, X2, X4> on {1..7} (Xr = { j : r·j odd })
/// with its shift by 8, through the representative bijection of index
/// 7 / 3 / 1 / 0. Throws InvalidArgument for an unknown kind.
Clique construct_clique(std::string_view kind);

struct ConstructOutput {
  Clique clique;
  Design design;
  HadamardMatrix hadamard;
  Report report;
};
ConstructOutput cmd_construct(std::string_view kind, HadamardStyle style);

/// Class tag with its evidence, plus group data of the design.
Report cmd_classify(const Design& d, const std::string& source);

Report cmd_isomorphic(const Design& a, const Design& b, const std::string& name_a,
                      const std::string& name_b);

struct CensusOptions {
  /// Defaults: O = {8..15}, Z = O minus its largest element.
  std::optional<ElementSet> center;
  std::optional<ElementSet> z;
  /// Use only the first `planes` Fano planes on each side (30 = all).
  std::size_t planes = 30;
};
/// Every product over the chosen planes and all 5040 bijections, with the
/// distinct-clique count, a per-index tally, and center counts per index.
/// Throws InconsistencyError if the distinct count or the index-7
/// singularity check disagrees with the parametrisation.
Report cmd_census(const CensusOptions& options);

struct EnumerateCommandOptions {
  int k = 3;
  std::optional<std::size_t> through;
  std::optional<std::size_t> limit;
  std::size_t min_size = 0;
  /// List cliques sorted instead of in search order.
  bool sorted = false;
};
Report cmd_enumerate(const EnumerateCommandOptions& options);

struct RelabelOutput {
  Permutation permutation;
  Design design;
  Report report;
};
RelabelOutput cmd_relabel(const Design& d, std::uint64_t seed);

/// Index spectrum and class partition over all bijections between the two
/// canonical planes.
Report cmd_fano_spectrum();

/// Parses "8,9,10" or "{8,9,10}" into a subset of [ground].
ElementSet parse_element_list(std::string_view text, int ground);

}  // namespace pgeom
