#include "pgeom/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pgeom {

namespace {

// C(63,32) and friends do not fit in memory; anything beyond P_4(15)'s
// neighbours is refused up front.
constexpr std::size_t kMaxRoster = 20'000'000;

std::size_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  double acc = 1.0;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return static_cast<std::size_t>(acc + 0.5);
}

}  // namespace

GeometryParams GeometryParams::from_k(int k) {
  if (k < 2 || k > 6) throw InvalidArgument("k must be in [2, 6], got " + std::to_string(k));
  const int m = 1 << (k - 2);
  return GeometryParams{k, m, 4 * m - 1};
}

GeometryParams GeometryParams::checked(int k, int m, int n) {
  const GeometryParams p = from_k(k);
  if (p.m != m || p.n != n) {
    throw InvalidArgument("inconsistent parameters (k, m, n) = (" + std::to_string(k) + ", " +
                          std::to_string(m) + ", " + std::to_string(n) +
                          "); need m = 2^(k-2), n = 2^k - 1");
  }
  return p;
}

Line make_line(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
  Line l{{a, b, c}};
  std::sort(l.points.begin(), l.points.end());
  return l;
}

bool collinear_sets(const ElementSet& x, const ElementSet& y) {
  const int s = x.size();
  return x != y && s == y.size() && s % 2 == 0 && intersection_size(x, y) == s / 2;
}

Geometry::Geometry(GeometryParams params) : params_(params) {
  params_ = GeometryParams::checked(params.k, params.m, params.n);
  if (binomial(params_.n, params_.point_size()) > kMaxRoster) {
    throw InvalidArgument("geometry with n = " + std::to_string(params_.n) +
                          " is too large to materialise");
  }
  points_ = subsets_of_size(ElementSet::full(params_.n), params_.point_size());
}

std::optional<std::size_t> Geometry::find(const ElementSet& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t Geometry::index_of(const ElementSet& p) const {
  auto i = find(p);
  if (!i) throw InvalidArgument(p.to_string() + " is not a point of the geometry");
  return *i;
}

void Geometry::require_point(const ElementSet& p) const { (void)index_of(p); }

bool Geometry::is_collinear(const ElementSet& x, const ElementSet& y) const {
  require_point(x);
  require_point(y);
  return x != y && intersection_size(x, y) == params_.m;
}

Line Geometry::line_through(const ElementSet& x, const ElementSet& y) const {
  if (!is_collinear(x, y)) {
    throw InvalidArgument(x.to_string() + " and " + y.to_string() + " are not collinear");
  }
  return make_line(x, y, symdiff(x, y));
}

bool Geometry::is_subspace(std::span<const ElementSet> s) const {
  for (const auto& p : s) require_point(p);
  const std::set<ElementSet> members(s.begin(), s.end());
  for (auto a = members.begin(); a != members.end(); ++a) {
    for (auto b = std::next(a); b != members.end(); ++b) {
      if (intersection_size(*a, *b) == params_.m && !members.contains(symdiff(*a, *b))) {
        return false;
      }
    }
  }
  return true;
}

bool Geometry::is_singular_subspace(std::span<const ElementSet> s) const {
  if (!is_subspace(s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && intersection_size(s[i], s[j]) != params_.m) return false;
    }
  }
  return true;
}

std::vector<ElementSet> Geometry::singular_span(std::span<const ElementSet> s) const {
  std::vector<ElementSet> span;
  std::set<ElementSet> members;
  for (const auto& p : s) {
    require_point(p);
    if (members.insert(p).second) span.push_back(p);
  }
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (intersection_size(span[i], span[j]) != params_.m) {
        throw InvalidArgument("singular_span: " + span[i].to_string() + " and " +
                              span[j].to_string() + " are not collinear");
      }
    }
  }
  // Worklist: every new point is combined with everything seen before it.
  for (std::size_t i = 1; i < span.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElementSet third = symdiff(span[i], span[j]);
      if (members.contains(third)) continue;
      if (third.size() != params_.point_size()) {
        throw InvalidArgument("singular_span: closure leaves the geometry at " + third.to_string());
      }
      for (const auto& p : span) {
        if (intersection_size(p, third) != params_.m) {
          throw InvalidArgument("singular_span: closure point " + third.to_string() +
                                " is not collinear with " + p.to_string());
        }
      }
      members.insert(third);
      span.push_back(third);
    }
  }
  std::sort(span.begin(), span.end());
  return span;
}

Geometry build_geometry(const GeometryParams& params) { return Geometry(params); }

}  // namespace pgeom
