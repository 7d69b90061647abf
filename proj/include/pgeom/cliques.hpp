#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgeom/element_set.hpp"
#include "pgeom/geometry.hpp"
#include "pgeom/vertex_set.hpp"

namespace pgeom {

/// Mutually collinear points, kept in the order they were supplied.
/// Construction checks: equal ground and even point size, distinct points,
/// pairwise collinear, and at most n points (Ryser bound; a larger clique
/// raises InconsistencyError since it would contradict the bound).
class Clique {
 public:
  Clique() = default;
  explicit Clique(std::vector<ElementSet> points);

  const std::vector<ElementSet>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ElementSet& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const ElementSet& p) const;
  int ground_size() const { return points_.empty() ? 0 : points_.front().ground_size(); }
  /// m, half the point size.
  int half_size() const { return points_.empty() ? 0 : points_.front().size() / 2; }

  std::vector<ElementSet> sorted_points() const;
  /// Equality as point sets, ignoring order.
  bool same_points(const Clique& other) const;

 private:
  std::vector<ElementSet> points_;
};

/// No point of the geometry outside c is collinear with every point of c.
bool is_maximal(const Geometry& g, const Clique& c);

/// Collinearity graph over an arbitrary list of equal-size points. Vertex i
/// is points()[i]; adjacency is a bitset row per vertex.
class CollinearityGraph {
 public:
  explicit CollinearityGraph(std::vector<ElementSet> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<ElementSet>& points() const { return points_; }
  const ElementSet& point(std::size_t v) const { return points_[v]; }
  const VertexSet& neighbours(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  /// Largest ground element; the Ryser bound caps cliques at this size.
  int ground_size() const { return ground_; }

  Clique clique_of(std::span<const std::size_t> vertices) const;

 private:
  std::vector<ElementSet> points_;
  std::vector<VertexSet> adjacency_;
  int ground_ = 0;
};

CollinearityGraph build_graph(const Geometry& g);

struct EnumerationOptions {
  /// Stop after this many cliques.
  std::optional<std::size_t> limit;
  /// Only cliques containing this vertex.
  std::optional<std::size_t> through_vertex;
  /// Skip branches that cannot reach this many vertices.
  std::size_t min_size = 0;
};

/// Receives each maximal clique as ascending vertex indices. Return false to
/// stop the enumeration.
using CliqueSink = std::function<bool(std::span<const std::size_t>)>;

/// Bron–Kerbosch with Tomita pivoting over bitset rows, outer loop in
/// degeneracy order. Pivot = vertex of P ∪ X with most neighbours in P
/// (smallest index on ties); branches visited in ascending index, so the
/// stream is deterministic. Returns the number of cliques emitted.
std::size_t enumerate_maximal_cliques(const CollinearityGraph& graph,
                                      const EnumerationOptions& options, const CliqueSink& sink);

std::vector<Clique> maximal_cliques(const CollinearityGraph& graph,
                                    const EnumerationOptions& options = {});

/// Points O of c such that O △ C is in c for every other C in c.
std::vector<ElementSet> center_points(const Clique& c);

/// Lines with all three points in c, ascending.
std::vector<Line> lines_inside(const Clique& c);

/// Seven-point subsets of c closed under △ (Fano planes inside c), each
/// sorted, list ascending.
std::vector<std::vector<ElementSet>> planes_inside(const Clique& c);

enum class CliqueTag { C1, C2, C3, C4, NonCentered };

std::string to_string(CliqueTag tag);
/// Index of a decomposing bijection for each centered tag: 7, 3, 1, 0.
int index_for_tag(CliqueTag tag);
CliqueTag tag_for_index(int index);

struct CliqueClass {
  CliqueTag tag = CliqueTag::NonCentered;
  std::vector<ElementSet> centers;
  /// Center used for the decomposition (smallest in roster order).
  std::optional<ElementSet> chosen_center;
  /// Index of the bijection at chosen_center; empty when non-centered.
  std::optional<int> bijection_index;
  std::size_t line_count = 0;
  std::vector<std::vector<ElementSet>> planes;
};

/// Classify a maximal 15-point clique of P_4(15). The tag comes from the
/// bijection index of the decomposition at the smallest center point; the
/// structural descriptions (singularity, planes, center lines) are checked
/// against it and any disagreement raises InconsistencyError. Throws
/// InvalidArgument for cliques that are not 15 sets of size 8 in [15].
CliqueClass classify_clique(const Clique& c);

}  // namespace pgeom
