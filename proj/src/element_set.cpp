#include "pgeom/element_set.hpp"

#include <sstream>

namespace pgeom {

namespace {

std::uint64_t ground_mask(int ground) {
  // bits 1..ground
  return ground == 0 ? 0 : (((~std::uint64_t{0}) >> (63 - ground)) & ~std::uint64_t{1});
}

void require_same_ground(const ElementSet& a, const ElementSet& b) {
  if (a.ground_size() != b.ground_size()) {
    throw InvalidArgument("ground-size mismatch: " + std::to_string(a.ground_size()) + " vs " +
                          std::to_string(b.ground_size()));
  }
}

}  // namespace

ElementSet::ElementSet(int ground, std::uint64_t bits) : bits_(bits), ground_(ground) {
  if (ground < 0 || ground > kMaxGround) {
    throw InvalidArgument("ground size must be in [0, 63], got " + std::to_string(ground));
  }
  if ((bits & ~ground_mask(ground)) != 0) {
    throw InvalidArgument("bitmask has elements outside 1.." + std::to_string(ground));
  }
}

ElementSet ElementSet::full(int ground) {
  if (ground < 0 || ground > kMaxGround) {
    throw InvalidArgument("ground size must be in [0, 63], got " + std::to_string(ground));
  }
  return ElementSet(ground, ground_mask(ground));
}

ElementSet ElementSet::of(int ground, std::initializer_list<int> elements) {
  return of(ground, std::vector<int>(elements));
}

ElementSet ElementSet::of(int ground, const std::vector<int>& elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > ground) {
      throw InvalidArgument("element " + std::to_string(e) + " outside 1.." +
                            std::to_string(ground));
    }
    bits |= std::uint64_t{1} << e;
  }
  return ElementSet(ground, bits);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_ground(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

ElementSet ElementSet::with(int element) const {
  if (element < 1 || element > ground_) throw InvalidArgument("element out of range");
  return ElementSet(ground_, bits_ | (std::uint64_t{1} << element));
}

ElementSet ElementSet::without(int element) const {
  if (element < 1 || element > ground_) throw InvalidArgument("element out of range");
  return ElementSet(ground_, bits_ & ~(std::uint64_t{1} << element));
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

int ElementSet::min_element() const {
  if (bits_ == 0) throw InvalidArgument("min_element of empty set");
  return std::countr_zero(bits_);
}

int ElementSet::max_element() const {
  if (bits_ == 0) throw InvalidArgument("max_element of empty set");
  return 63 - std::countl_zero(bits_);
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

ElementSet symdiff(const ElementSet& a, const ElementSet& b) {
  require_same_ground(a, b);
  return ElementSet(a.ground_size(), a.bits() ^ b.bits());
}

ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  require_same_ground(a, b);
  return ElementSet(a.ground_size(), a.bits() & b.bits());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  require_same_ground(a, b);
  return ElementSet(a.ground_size(), a.bits() | b.bits());
}

int intersection_size(const ElementSet& a, const ElementSet& b) {
  require_same_ground(a, b);
  return std::popcount(a.bits() & b.bits());
}

ElementSet complement_in(const ElementSet& a, const ElementSet& universe) {
  if (!a.is_subset_of(universe)) {
    throw InvalidArgument(a.to_string() + " is not a subset of " + universe.to_string());
  }
  return ElementSet(a.ground_size(), universe.bits() & ~a.bits());
}

std::vector<ElementSet> subsets_of_size(const ElementSet& universe, int size) {
  std::vector<ElementSet> out;
  const std::vector<int> elems = universe.elements();
  const int n = static_cast<int>(elems.size());
  if (size < 0 || size > n) return out;
  if (size == 0) {
    out.push_back(ElementSet::empty(universe.ground_size()));
    return out;
  }
  // Gosper's hack over positions in `elems`, then scatter; scattering is
  // monotone so the output is in ascending bitmask order.
  for (std::uint64_t pos = (std::uint64_t{1} << size) - 1; pos < (std::uint64_t{1} << n);) {
    std::uint64_t bits = 0;
    for (std::uint64_t p = pos; p != 0; p &= p - 1) {
      bits |= std::uint64_t{1} << elems[static_cast<std::size_t>(std::countr_zero(p))];
    }
    out.emplace_back(universe.ground_size(), bits);
    const std::uint64_t c = pos & (~pos + 1);
    const std::uint64_t r = pos + c;
    pos = (((r ^ pos) >> 2) / c) | r;
  }
  return out;
}

}  // namespace pgeom
