#include <algorithm>
#include <unordered_set>

#include "pgeom/cliques.hpp"
#include "pgeom/constructions.hpp"
#include "pgeom/fano.hpp"

namespace pgeom {

namespace {

void expect(bool ok, CliqueTag tag, const std::string& what) {
  if (!ok) {
    throw InconsistencyError("index route says " + to_string(tag) +
                             " but structure disagrees: " + what);
  }
}

bool line_in_plane(const Line& l, const std::vector<ElementSet>& plane) {
  return std::all_of(l.points.begin(), l.points.end(), [&](const ElementSet& p) {
    return std::binary_search(plane.begin(), plane.end(), p);
  });
}

void check_structure(const CliqueClass& cls, const Clique& c, const std::vector<Line>& lines) {
  const CliqueTag tag = cls.tag;
  const ElementSet& o = *cls.chosen_center;
  switch (tag) {
    case CliqueTag::C1: {
      expect(cls.centers.size() == 15, tag, "not every point is a center");
      expect(lines.size() == 35, tag, "line count is not 35");
      const std::unordered_set<ElementSet> members(c.points().begin(), c.points().end());
      for (const auto& a : c.points()) {
        for (const auto& b : c.points()) {
          expect(a == b || members.contains(symdiff(a, b)), tag, "not a singular subspace");
        }
      }
      break;
    }
    case CliqueTag::C2: {
      expect(cls.planes.size() == 3, tag, "expected three planes");
      std::vector<ElementSet> common = cls.planes[0];
      for (std::size_t i = 1; i < cls.planes.size(); ++i) {
        std::vector<ElementSet> next;
        std::set_intersection(common.begin(), common.end(), cls.planes[i].begin(),
                              cls.planes[i].end(), std::back_inserter(next));
        common = std::move(next);
      }
      expect(common.size() == 3 && symdiff(common[0], common[1]) == common[2], tag,
             "planes do not share a line");
      expect(common == cls.centers, tag, "shared line is not the set of center points");
      for (const auto& l : lines) {
        expect(std::any_of(cls.planes.begin(), cls.planes.end(),
                           [&](const auto& p) { return line_in_plane(l, p); }),
               tag, "a line lies outside the three planes");
      }
      break;
    }
    case CliqueTag::C3: {
      expect(cls.centers.size() == 1, tag, "center is not unique");
      expect(cls.planes.size() == 1, tag, "plane is not unique");
      expect(std::binary_search(cls.planes[0].begin(), cls.planes[0].end(), o), tag,
             "center is not on the plane");
      for (const auto& l : lines) {
        expect(line_in_plane(l, cls.planes[0]) || l.contains(o), tag,
               "a line is neither in the plane nor through the center");
      }
      break;
    }
    case CliqueTag::C4: {
      expect(cls.centers.size() == 1, tag, "center is not unique");
      expect(cls.planes.empty(), tag, "clique contains a plane");
      expect(lines.size() == 7, tag, "line count is not 7");
      for (const auto& l : lines) expect(l.contains(o), tag, "a line misses the center");
      break;
    }
    case CliqueTag::NonCentered:
      break;
  }
}

}  // namespace

CliqueClass classify_clique(const Clique& c) {
  if (c.size() != 15 || c.ground_size() != 15 || c.half_size() != 4) {
    throw InvalidArgument("classification needs a 15-point clique of 8-subsets of [15]");
  }
  CliqueClass cls;
  cls.centers = center_points(c);
  const std::vector<Line> lines = lines_inside(c);
  cls.line_count = lines.size();
  cls.planes = planes_inside(c);
  if (cls.centers.empty()) {
    cls.tag = CliqueTag::NonCentered;
    return cls;
  }

  cls.chosen_center = cls.centers.front();
  const CenteredDecomposition d = decompose(c, *cls.chosen_center);
  const int index = bijection_index(d.fano_bijection());
  cls.bijection_index = index;
  cls.tag = tag_for_index(index);

  // Lines inside the plus half correspond to lines kept by the bijection.
  const Clique plus(d.plus_half);
  if (lines_inside(plus).size() != static_cast<std::size_t>(index)) {
    throw InconsistencyError("plus half holds " + std::to_string(lines_inside(plus).size()) +
                             " lines but the bijection index is " + std::to_string(index));
  }
  check_structure(cls, c, lines);
  return cls;
}

}  // namespace pgeom
