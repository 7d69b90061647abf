#include "pgeom/cliques.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pgeom {

Clique::Clique(std::vector<ElementSet> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  const int ground = points_.front().ground_size();
  const int size = points_.front().size();
  if (size % 2 != 0) throw InvalidArgument("clique points must have even size");
  for (const auto& p : points_) {
    if (p.ground_size() != ground || p.size() != size) {
      throw InvalidArgument("clique points must share ground set and size");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (!collinear_sets(points_[i], points_[j])) {
        throw InvalidArgument("not a clique: " + points_[i].to_string() + " and " +
                              points_[j].to_string() + " are not collinear");
      }
    }
  }
  if (points_.size() > static_cast<std::size_t>(ground)) {
    throw InconsistencyError("clique of size " + std::to_string(points_.size()) +
                             " exceeds the Ryser bound n = " + std::to_string(ground));
  }
}

bool Clique::contains(const ElementSet& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

std::vector<ElementSet> Clique::sorted_points() const {
  auto out = points_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Clique::same_points(const Clique& other) const {
  return sorted_points() == other.sorted_points();
}

bool is_maximal(const Geometry& g, const Clique& c) {
  for (const auto& p : c.points()) (void)g.index_of(p);
  for (const auto& q : g.points()) {
    if (c.contains(q)) continue;
    bool all = true;
    for (const auto& p : c.points()) {
      if (intersection_size(p, q) != g.params().m) {
        all = false;
        break;
      }
    }
    if (all) return false;
  }
  return true;
}

CollinearityGraph::CollinearityGraph(std::vector<ElementSet> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  adjacency_.assign(n, VertexSet(n));
  if (n == 0) return;
  ground_ = points_.front().ground_size();
  const int half = points_.front().size() / 2;
  for (const auto& p : points_) {
    if (p.ground_size() != ground_ || p.size() != 2 * half) {
      throw InvalidArgument("graph points must share ground set and an even size");
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint64_t bu = points_[u].bits();
    for (std::size_t v = u + 1; v < n; ++v) {
      if (std::popcount(bu & points_[v].bits()) == half) {
        adjacency_[u].set(v);
        adjacency_[v].set(u);
      }
    }
  }
}

Clique CollinearityGraph::clique_of(std::span<const std::size_t> vertices) const {
  std::vector<ElementSet> pts;
  pts.reserve(vertices.size());
  for (auto v : vertices) pts.push_back(points_.at(v));
  return Clique(std::move(pts));
}

CollinearityGraph build_graph(const Geometry& g) { return CollinearityGraph(g.points()); }

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const CollinearityGraph& graph, const EnumerationOptions& options,
               const CliqueSink& sink)
      : graph_(graph), options_(options), sink_(sink) {}

  // Returns false once the enumeration must stop.
  bool expand(VertexSet& candidates, VertexSet& excluded) {
    if (candidates.none()) {
      if (excluded.none()) return emit();
      return true;
    }
    if (clique_.size() + candidates.count() < options_.min_size) return true;

    const std::size_t pivot = choose_pivot(candidates, excluded);
    VertexSet branch = candidates;
    branch.subtract(graph_.neighbours(pivot));
    bool keep_going = true;
    branch.for_each([&](std::size_t v) {
      if (!keep_going) return;
      VertexSet next_candidates = candidates & graph_.neighbours(v);
      VertexSet next_excluded = excluded & graph_.neighbours(v);
      clique_.push_back(v);
      keep_going = expand(next_candidates, next_excluded);
      clique_.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
    return keep_going;
  }

  std::vector<std::size_t>& clique() { return clique_; }
  std::size_t emitted() const { return emitted_; }

 private:
  std::size_t choose_pivot(const VertexSet& candidates, const VertexSet& excluded) const {
    std::size_t best = 0;
    std::size_t best_count = 0;
    bool found = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = candidates.count_and(graph_.neighbours(u));
      if (!found || c > best_count || (c == best_count && u < best)) {
        best = u;
        best_count = c;
        found = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);
    return best;
  }

  bool emit() {
    if (clique_.size() < options_.min_size) return true;
    if (clique_.size() > static_cast<std::size_t>(graph_.ground_size())) {
      throw InconsistencyError("maximal clique of size " + std::to_string(clique_.size()) +
                               " exceeds the Ryser bound");
    }
    std::vector<std::size_t> sorted = clique_;
    std::sort(sorted.begin(), sorted.end());
    ++emitted_;
    if (!sink_(sorted)) return false;
    return !(options_.limit && emitted_ >= *options_.limit);
  }

  const CollinearityGraph& graph_;
  const EnumerationOptions& options_;
  const CliqueSink& sink_;
  std::vector<std::size_t> clique_;
  std::size_t emitted_ = 0;
};

std::vector<std::size_t> degeneracy_order(const CollinearityGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    }
    removed[best] = true;
    order.push_back(best);
    graph.neighbours(best).for_each([&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  return order;
}

}  // namespace

std::size_t enumerate_maximal_cliques(const CollinearityGraph& graph,
                                      const EnumerationOptions& options, const CliqueSink& sink) {
  const std::size_t n = graph.size();
  if (options.limit && *options.limit == 0) return 0;
  BronKerbosch bk(graph, options, sink);

  if (options.through_vertex) {
    const std::size_t v = *options.through_vertex;
    if (v >= n) throw InvalidArgument("through_vertex out of range");
    VertexSet candidates = graph.neighbours(v);
    VertexSet excluded(n);
    bk.clique().push_back(v);
    bk.expand(candidates, excluded);
    return bk.emitted();
  }

  const std::vector<std::size_t> order = degeneracy_order(graph);
  VertexSet earlier(n);
  VertexSet later(n);
  for (std::size_t v = 0; v < n; ++v) later.set(v);
  for (std::size_t v : order) {
    later.reset(v);
    VertexSet candidates = graph.neighbours(v) & later;
    VertexSet excluded = graph.neighbours(v) & earlier;
    bk.clique().push_back(v);
    const bool keep_going = bk.expand(candidates, excluded);
    bk.clique().pop_back();
    if (!keep_going) break;
    earlier.set(v);
  }
  return bk.emitted();
}

std::vector<Clique> maximal_cliques(const CollinearityGraph& graph,
                                    const EnumerationOptions& options) {
  std::vector<Clique> out;
  enumerate_maximal_cliques(graph, options, [&](std::span<const std::size_t> vs) {
    out.push_back(graph.clique_of(vs));
    return true;
  });
  return out;
}

std::vector<ElementSet> center_points(const Clique& c) {
  const std::unordered_set<ElementSet> members(c.points().begin(), c.points().end());
  std::vector<ElementSet> centers;
  for (const auto& o : c.points()) {
    bool is_center = true;
    for (const auto& p : c.points()) {
      if (p != o && !members.contains(symdiff(o, p))) {
        is_center = false;
        break;
      }
    }
    if (is_center) centers.push_back(o);
  }
  std::sort(centers.begin(), centers.end());
  return centers;
}

std::vector<Line> lines_inside(const Clique& c) {
  const std::unordered_set<ElementSet> members(c.points().begin(), c.points().end());
  std::set<Line> lines;
  const auto& pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const ElementSet third = symdiff(pts[i], pts[j]);
      if (members.contains(third)) lines.insert(make_line(pts[i], pts[j], third));
    }
  }
  return {lines.begin(), lines.end()};
}

std::vector<std::vector<ElementSet>> planes_inside(const Clique& c) {
  const std::unordered_set<ElementSet> members(c.points().begin(), c.points().end());
  const std::vector<Line> lines = lines_inside(c);
  std::set<std::vector<ElementSet>> planes;
  // A plane is spanned by two of its lines meeting in a point.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& a = lines[i].points;
      const auto& b = lines[j].points;
      int shared = 0;
      ElementSet common;
      for (const auto& p : a) {
        if (lines[j].contains(p)) {
          ++shared;
          common = p;
        }
      }
      if (shared != 1) continue;
      std::vector<ElementSet> pa, pb;
      for (const auto& p : a) if (p != common) pa.push_back(p);
      for (const auto& p : b) if (p != common) pb.push_back(p);
      std::vector<ElementSet> plane = {common, pa[0], pa[1], pb[0], pb[1],
                                       symdiff(pa[0], pb[0]), symdiff(pa[0], pb[1])};
      bool inside = true;
      for (const auto& p : plane) inside = inside && members.contains(p);
      if (!inside) continue;
      std::sort(plane.begin(), plane.end());
      planes.insert(std::move(plane));
    }
  }
  return {planes.begin(), planes.end()};
}

std::string to_string(CliqueTag tag) {
  switch (tag) {
    case CliqueTag::C1: return "C1";
    case CliqueTag::C2: return "C2";
    case CliqueTag::C3: return "C3";
    case CliqueTag::C4: return "C4";
    case CliqueTag::NonCentered: return "NON_CENTERED";
  }
  return "?";
}

int index_for_tag(CliqueTag tag) {
  switch (tag) {
    case CliqueTag::C1: return 7;
    case CliqueTag::C2: return 3;
    case CliqueTag::C3: return 1;
    case CliqueTag::C4: return 0;
    case CliqueTag::NonCentered: break;
  }
  throw InvalidArgument("non-centered cliques have no bijection index");
}

CliqueTag tag_for_index(int index) {
  switch (index) {
    case 7: return CliqueTag::C1;
    case 3: return CliqueTag::C2;
    case 1: return CliqueTag::C3;
    case 0: return CliqueTag::C4;
    default: break;
  }
  throw InconsistencyError("bijection index " + std::to_string(index) +
                           " is not one of 0, 1, 3, 7");
}

}  // namespace pgeom
