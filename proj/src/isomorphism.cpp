#include "pgeom/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pgeom/error.hpp"

namespace pgeom {

namespace {

// Point/block incidence with 0-based points and blocks.
struct Incidence {
  int v = 0;
  std::vector<std::vector<int>> point_blocks;
  std::vector<std::vector<int>> block_points;

  explicit Incidence(const Design& d) : v(d.v()) {
    point_blocks.resize(static_cast<std::size_t>(v));
    block_points.resize(static_cast<std::size_t>(v));
    for (int b = 0; b < v; ++b) {
      for (int x : d.block(static_cast<std::size_t>(b)).elements()) {
        point_blocks[static_cast<std::size_t>(x - 1)].push_back(b);
        block_points[static_cast<std::size_t>(b)].push_back(x - 1);
      }
    }
  }
};

struct Coloring {
  std::vector<int> point;
  std::vector<int> block;
};

std::size_t distinct(const std::vector<int>& colors) {
  std::vector<int> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

bool same_histogram(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// One round of joint refinement for one side (points or blocks). Colour ids
// come from the sorted signatures of both designs, so equal ids mean equal
// signatures across the pair.
void refine_side(const std::vector<std::vector<int>>& adj_a, const std::vector<int>& own_a,
                 const std::vector<int>& other_a, const std::vector<std::vector<int>>& adj_b,
                 const std::vector<int>& own_b, const std::vector<int>& other_b,
                 std::vector<int>& out_a, std::vector<int>& out_b) {
  auto signature = [](const std::vector<int>& adj, int own, const std::vector<int>& other) {
    std::vector<int> sig;
    sig.reserve(adj.size() + 1);
    sig.push_back(own);
    for (int w : adj) sig.push_back(other[static_cast<std::size_t>(w)]);
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  };
  const std::size_t n = own_a.size();
  std::vector<std::vector<int>> sa(n), sb(n);
  std::map<std::vector<int>, int> ids;
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = signature(adj_a[i], own_a[i], other_a);
    sb[i] = signature(adj_b[i], own_b[i], other_b);
    ids.emplace(sa[i], 0);
    ids.emplace(sb[i], 0);
  }
  int next = 0;
  for (auto& [sig, id] : ids) id = next++;
  out_a.resize(n);
  out_b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out_a[i] = ids[sa[i]];
    out_b[i] = ids[sb[i]];
  }
}

// Refines both colorings to the coarsest equitable pair. Returns false as
// soon as the colour histograms differ, which rules out any isomorphism
// respecting the current colours.
bool refine(const Incidence& a, Coloring& ca, const Incidence& b, Coloring& cb) {
  std::size_t classes = distinct(ca.point) + distinct(ca.block);
  for (;;) {
    Coloring na, nb;
    refine_side(a.point_blocks, ca.point, ca.block, b.point_blocks, cb.point, cb.block, na.point,
                nb.point);
    refine_side(a.block_points, ca.block, ca.point, b.block_points, cb.block, cb.point, na.block,
                nb.block);
    if (!same_histogram(na.point, nb.point) || !same_histogram(na.block, nb.block)) return false;
    ca = std::move(na);
    cb = std::move(nb);
    const std::size_t now = distinct(ca.point) + distinct(ca.block);
    if (now == classes) return true;
    classes = now;
  }
}

class Search {
 public:
  Search(const Design& d1, const Design& d2, const std::function<bool(const Permutation&)>& visit,
         SearchStats* stats)
      : d1_(d1), d2_(d2), a_(d1), b_(d2), visit_(visit), stats_(stats) {}

  // Returns the number of isomorphisms visited.
  std::uint64_t run(const std::vector<std::pair<int, int>>& forced) {
    const auto v = static_cast<std::size_t>(a_.v);
    Coloring ca{std::vector<int>(v, 0), std::vector<int>(v, 0)};
    Coloring cb = ca;
    int fresh = 1;
    for (auto [x, y] : forced) {
      if (x < 1 || x > a_.v || y < 1 || y > b_.v) throw InvalidArgument("forced point out of range");
      if (ca.point[static_cast<std::size_t>(x - 1)] != 0 || cb.point[static_cast<std::size_t>(y - 1)] != 0) {
        throw InvalidArgument("forced points must be distinct");
      }
      ca.point[static_cast<std::size_t>(x - 1)] = fresh;
      cb.point[static_cast<std::size_t>(y - 1)] = fresh;
      ++fresh;
    }
    recurse(std::move(ca), std::move(cb));
    return found_;
  }

 private:
  // Returns false once the visitor asks to stop.
  bool recurse(Coloring ca, Coloring cb) {
    if (stats_) ++stats_->nodes;
    if (!refine(a_, ca, b_, cb)) return true;

    // Target cell: smallest non-singleton point cell of d1, ties broken by
    // the smallest point in it. Depends only on d1's partition.
    const auto v = static_cast<std::size_t>(a_.v);
    std::map<int, std::vector<int>> cells;
    for (std::size_t x = 0; x < v; ++x) cells[ca.point[x]].push_back(static_cast<int>(x));
    const std::vector<int>* target = nullptr;
    int target_colour = 0;
    for (const auto& [colour, members] : cells) {
      if (members.size() < 2) continue;
      if (!target || members.size() < target->size() ||
          (members.size() == target->size() && members.front() < target->front())) {
        target = &members;
        target_colour = colour;
      }
    }

    if (!target) {
      if (stats_) ++stats_->leaves;
      std::map<int, int> where;
      for (std::size_t y = 0; y < v; ++y) where[cb.point[y]] = static_cast<int>(y);
      std::vector<std::uint8_t> images(v);
      for (std::size_t x = 0; x < v; ++x) images[x] = static_cast<std::uint8_t>(where.at(ca.point[x]) + 1);
      Permutation p(std::move(images));
      if (!d1_.maps_onto(p, d2_)) return true;
      ++found_;
      return visit_(p);
    }

    const int fresh = static_cast<int>(cells.rbegin()->first) + 1;
    const int x = target->front();
    for (std::size_t y = 0; y < v; ++y) {
      if (cb.point[y] != target_colour) continue;
      Coloring na = ca, nb = cb;
      na.point[static_cast<std::size_t>(x)] = fresh;
      nb.point[y] = fresh;
      if (!recurse(std::move(na), std::move(nb))) return false;
    }
    return true;
  }

  const Design& d1_;
  const Design& d2_;
  Incidence a_, b_;
  const std::function<bool(const Permutation&)>& visit_;
  SearchStats* stats_;
  std::uint64_t found_ = 0;
};

bool preserves(const Design& d, const PermGroup& g) {
  if (g.degree() != d.v()) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Permutation& p) { return d.maps_onto(p, d); });
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::uint64_t for_each_isomorphism(const Design& d1, const Design& d2,
                                   const std::vector<std::pair<int, int>>& forced,
                                   const std::function<bool(const Permutation&)>& visit,
                                   SearchStats* stats) {
  if (d1.v() != d2.v()) return 0;
  Search search(d1, d2, visit, stats);
  return search.run(forced);
}

std::optional<Permutation> find_isomorphism(const Design& d1, const Design& d2, SearchStats* stats) {
  std::optional<Permutation> found;
  for_each_isomorphism(
      d1, d2, {},
      [&](const Permutation& p) {
        found = p;
        return false;
      },
      stats);
  return found;
}

std::optional<std::uint64_t> count_automorphisms(const Design& d, std::uint64_t cap) {
  std::uint64_t count = 0;
  bool over = false;
  for_each_isomorphism(d, d, {}, [&](const Permutation&) {
    if (++count > cap) {
      over = true;
      return false;
    }
    return true;
  });
  if (over) return std::nullopt;
  return count;
}

PermGroup automorphism_group(const Design& d) {
  const int v = d.v();
  // Stabilizer chain: at level i the base points b_0..b_{i-1} are fixed and
  // every candidate image of b_i is tested for an extending automorphism.
  std::vector<std::pair<int, int>> fixed;
  std::vector<Permutation> generators;
  std::uint64_t chain_order = 1;
  std::vector<bool> in_base(static_cast<std::size_t>(v + 1), false);
  for (;;) {
    // Pick the next base point: the first automorphism found beyond the
    // fixed ones tells us whether the stabilizer is trivial.
    int next = 0;
    for (int x = 1; x <= v && next == 0; ++x) {
      if (in_base[static_cast<std::size_t>(x)]) continue;
      for (int y = 1; y <= v && next == 0; ++y) {
        if (y == x || in_base[static_cast<std::size_t>(y)]) continue;
        auto pinned = fixed;
        pinned.emplace_back(x, y);
        bool hit = false;
        for_each_isomorphism(d, d, pinned, [&](const Permutation&) {
          hit = true;
          return false;
        });
        if (hit) next = x;
      }
    }
    if (next == 0) break;
    std::uint64_t orbit = 0;
    for (int y = 1; y <= v; ++y) {
      if (in_base[static_cast<std::size_t>(y)]) continue;
      auto pinned = fixed;
      pinned.emplace_back(next, y);
      std::optional<Permutation> witness;
      for_each_isomorphism(d, d, pinned, [&](const Permutation& p) {
        witness = p;
        return false;
      });
      if (!witness) continue;
      ++orbit;
      if (y != next) generators.push_back(*witness);
    }
    chain_order *= orbit;
    fixed.emplace_back(next, next);
    in_base[static_cast<std::size_t>(next)] = true;
  }

  PermGroup group(v, std::move(generators));
  if (group.order() != chain_order) {
    throw InconsistencyError("automorphism order: stabilizer chain " + std::to_string(chain_order) +
                             " vs Schreier-Sims " + std::to_string(group.order()));
  }
  if (chain_order <= 1'000'000) {
    const auto counted = count_automorphisms(d, 1'000'000);
    if (!counted || *counted != chain_order) {
      throw InconsistencyError("automorphism order: stabilizer chain " + std::to_string(chain_order) +
                               " vs enumeration " + (counted ? std::to_string(*counted) : "> 10^6"));
    }
  }
  return group;
}

std::size_t block_orbit_count(const Design& d, const PermGroup& g) {
  if (!preserves(d, g)) throw InvalidArgument("group does not preserve the design");
  UnionFind uf(static_cast<std::size_t>(d.v()));
  for (const auto& p : g.generators()) {
    for (std::size_t b = 0; b < d.blocks().size(); ++b) {
      uf.unite(b, static_cast<std::size_t>(d.find_block(apply(p, d.block(b)))));
    }
  }
  return uf.classes();
}

std::size_t flag_orbit_count(const Design& d, const PermGroup& g) {
  if (!preserves(d, g)) throw InvalidArgument("group does not preserve the design");
  const auto v = static_cast<std::size_t>(d.v());
  // Flag (x, b) indexed as b * (v + 1) + x; non-incident slots stay singleton
  // and are subtracted at the end.
  UnionFind uf(v * (v + 1));
  for (const auto& p : g.generators()) {
    for (std::size_t b = 0; b < v; ++b) {
      const auto image = static_cast<std::size_t>(d.find_block(apply(p, d.block(b))));
      for (int x : d.block(b).elements()) {
        uf.unite(b * (v + 1) + static_cast<std::size_t>(x), image * (v + 1) + static_cast<std::size_t>(p(x)));
      }
    }
  }
  const std::size_t flags = v * static_cast<std::size_t>(d.block_size());
  return uf.classes() - (v * (v + 1) - flags);
}

PointActionReport point_action_report(const PermGroup& g) {
  PointActionReport r;
  r.point_orbits = g.orbits().size();
  r.transitive = r.point_orbits == 1;
  if (r.transitive) {
    for (const auto& system : g.minimal_block_systems()) r.block_sizes.push_back(system.front().size());
    std::sort(r.block_sizes.begin(), r.block_sizes.end());
    r.primitive = r.block_sizes.empty();
  }
  return r;
}

}  // namespace pgeom
