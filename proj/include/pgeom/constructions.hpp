#pragma once

#include <span>
#include <vector>

#include "pgeom/cliques.hpp"
#include "pgeom/element_set.hpp"
#include "pgeom/fano.hpp"

namespace pgeom {

/// A centered n-clique written as O, Z, the two (2m-1)-cliques and the
/// bijection between them.
struct CenteredDecomposition {
  ElementSet center;                 // O, a 2m-set
  ElementSet z;                      // (2m-1)-subset of O
  std::vector<ElementSet> x_part;    // maximal clique of m-subsets of O^c
  std::vector<ElementSet> y_part;    // maximal clique of m-subsets of Z, ascending
  std::vector<ElementSet> images;    // images[i] = delta(x_part[i]), an element of y_part
  std::vector<ElementSet> plus_half;   // x ∪ delta(x)
  std::vector<ElementSet> minus_half;  // x ∪ (O \ delta(x))

  /// The bijection as a FanoBijection; only valid when the parts have seven
  /// points (k = 4). Throws InvalidArgument otherwise.
  FanoBijection fano_bijection() const;
};

/// {O} ∪ {x ∪ δ(x)} ∪ {x ∪ (O \ δ(x))}. `delta[i]` is the position in
/// `y_part` of the image of `x_part[i]`. Output order: the plus half in
/// x_part order, then O, then the minus half in x_part order.
///
/// Throws InvalidArgument on cardinality violations, when x_part / y_part
/// are not maximal (2m-1)-cliques of m-subsets of O^c / of a (2m-1)-subset
/// of O, or when delta is not a bijection. The result has n points, so it
/// is maximal by the Ryser bound.
Clique product_clique(const ElementSet& center, std::span<const ElementSet> x_part,
                      std::span<const ElementSet> y_part, std::span<const std::size_t> delta);

/// Same, with X = delta.source, Y = delta.target; plus half in source slot
/// order.
Clique product_clique(const ElementSet& center, const FanoBijection& delta);

/// O minus its largest element.
ElementSet default_z(const ElementSet& center);

/// Inverse of product_clique at a given center and Z. Throws InvalidArgument
/// if center is not a center point of c or Z is not a (2m-1)-subset of it.
CenteredDecomposition decompose(const Clique& c, const ElementSet& center, const ElementSet& z);
CenteredDecomposition decompose(const Clique& c, const ElementSet& center);

/// Complements of the hyperplanes of PG(k-1, 2). The ground set [2^k - 1]
/// is the point set of PG(k-1, 2), element j being the nonzero vector with
/// binary expansion j; block h (h = 1 .. 2^k - 1, in this order) is
/// { j : <h, j> = 1 }. Throws InvalidArgument for k < 3.
Clique hyperplane_complement_clique(int k);

/// Signed ground set [-7] ∪ {0} ∪ [7] mapped onto [15]: -7..-1 -> 1..7,
/// 0 -> 8, 1..7 -> 9..15.
int signed_label(int signed_element);
ElementSet signed_set(std::initializer_list<int> signed_elements);
/// {±i : i in indices}.
ElementSet plus_minus(std::initializer_list<int> indices);

/// N_ij = {0, i, j, 7} ∪ ([-6] \ {-i, -j}) for distinct i, j in [6].
ElementSet n_point(int i, int j);
/// M_ijt = {-7, 0, i, j, t} ∪ ([-6] \ {-i, -j, -t}) for distinct i, j, t in [6].
ElementSet m_point(int i, int j, int t);

/// Pieces of the non-centered clique.
struct NonCenteredParts {
  std::vector<ElementSet> plane;        // X1, X2, X3, X, X△X1, X△X2, X△X3
  ElementSet y;                         // {0} ∪ [7]
  std::vector<ElementSet> nm_points;    // N13, N25, N46, M124, M156, M236, M345
  std::vector<ElementSet> deleted_plane;  // Y △ each of nm_points
  std::vector<ElementSet> singular;     // span of deleted_plane and Y, 15 points
};
NonCenteredParts non_centered_parts();

/// (S \ F') ∪ F: the plane, then Y, then the N and M points.
Clique non_centered_clique();

}  // namespace pgeom
