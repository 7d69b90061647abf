#include "pgeom/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "pgeom/error.hpp"

namespace pgeom {

namespace {

int first_moved_point(const Permutation& p) {
  for (int x = 1; x <= p.degree(); ++x) {
    if (p(x) != x) return x;
  }
  return 0;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n + 1)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

PermGroup::PermGroup(int degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InvalidArgument("generator degree mismatch");
  }
  schreier_sims();
}

std::vector<Permutation> PermGroup::level_generators(std::size_t level) const {
  std::vector<Permutation> out;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < level && fixes; ++j) fixes = s(base_[j]) == base_[j];
    if (fixes) out.push_back(s);
  }
  return out;
}

void PermGroup::build_levels() {
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Level& lv = levels_[i];
    lv.base_point = base_[i];
    lv.transversal.assign(static_cast<std::size_t>(degree_ + 1), std::nullopt);
    lv.transversal[static_cast<std::size_t>(lv.base_point)] = Permutation::identity(degree_);
    lv.orbit = {lv.base_point};
    const auto gens = level_generators(i);
    for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
      const int point = lv.orbit[q];
      for (const auto& s : gens) {
        const int image = s(point);
        auto& slot = lv.transversal[static_cast<std::size_t>(image)];
        if (!slot) {
          slot = *lv.transversal[static_cast<std::size_t>(point)] * s;
          lv.orbit.push_back(image);
        }
      }
    }
  }
}

Permutation PermGroup::sift(Permutation h, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const int p = h(levels_[l].base_point);
    const auto& u = levels_[l].transversal[static_cast<std::size_t>(p)];
    if (!u) return h;
    h = h * u->inverse();
  }
  return h;
}

void PermGroup::schreier_sims() {
  strong_.clear();
  base_.clear();
  auto add_strong = [&](const Permutation& g) {
    strong_.push_back(g);
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) base_.push_back(first_moved_point(g));
  };
  for (const auto& g : generators_) {
    if (!g.is_identity()) add_strong(g);
  }
  // Rebuild and re-test Schreier generators until every one sifts to the
  // identity. Degrees here are tiny, so restarting after each addition is
  // cheaper to reason about than incremental bookkeeping.
  bool changed = true;
  while (changed) {
    changed = false;
    build_levels();
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      const auto gens = level_generators(i);
      for (int p : levels_[i].orbit) {
        const Permutation& up = *levels_[i].transversal[static_cast<std::size_t>(p)];
        for (const auto& s : gens) {
          const Permutation& ups = *levels_[i].transversal[static_cast<std::size_t>(s(p))];
          const Permutation residue = sift(up * s * ups.inverse(), i + 1);
          if (!residue.is_identity()) {
            add_strong(residue);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }
  build_levels();
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t order = 1;
  for (const auto& lv : levels_) order *= lv.orbit.size();
  return order;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).is_identity();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw InvalidArgument("group too large to materialise");
  // g = u_{k-1} * ... * u_1 * u_0 with u_i from the i-th transversal.
  std::vector<Permutation> current = {Permutation::identity(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * levels_[l].orbit.size());
    for (const auto& g : current) {
      for (int p : levels_[l].orbit) next.push_back(g * *levels_[l].transversal[static_cast<std::size_t>(p)]);
    }
    current = std::move(next);
  }
  return current;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  UnionFind uf(degree_);
  for (const auto& g : generators_) {
    for (int x = 1; x <= degree_; ++x) uf.unite(x, g(x));
  }
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(degree_ + 1));
  for (int x = 1; x <= degree_; ++x) by_root[static_cast<std::size_t>(uf.find(x))].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& o : by_root) {
    if (!o.empty()) out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> PermGroup::minimal_block_systems() const {
  if (!is_transitive()) throw InvalidArgument("block systems need a transitive group");
  std::set<std::vector<std::vector<int>>> systems;
  for (int q = 2; q <= degree_; ++q) {
    // Atkinson: merge 1 and q, then close the partition under the generators.
    UnionFind uf(degree_);
    std::deque<std::pair<int, int>> pending;
    uf.unite(1, q);
    pending.emplace_back(1, q);
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      for (const auto& g : generators_) {
        const int ra = uf.find(g(a));
        const int rb = uf.find(g(b));
        if (ra != rb) {
          uf.unite(ra, rb);
          pending.emplace_back(ra, rb);
        }
      }
    }
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(degree_ + 1));
    for (int x = 1; x <= degree_; ++x) blocks[static_cast<std::size_t>(uf.find(x))].push_back(x);
    std::vector<std::vector<int>> partition;
    for (auto& b : blocks) {
      if (!b.empty()) partition.push_back(std::move(b));
    }
    if (partition.size() > 1) systems.insert(std::move(partition));
  }
  return {systems.begin(), systems.end()};
}

}  // namespace pgeom
