#include "pgeom/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pgeom {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n > static_cast<std::size_t>(kMaxGround)) throw InvalidArgument("permutation degree > 63");
  std::vector<bool> seen(n + 1, false);
  for (std::uint8_t v : images_) {
    if (v < 1 || v > n || seen[v]) throw InvalidArgument("images are not a bijection of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), std::uint8_t{1});
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto im = identity(n).images_;
  if (a < 1 || a > n || b < 1 || b > n) throw InvalidArgument("transposition out of range");
  std::swap(im[static_cast<std::size_t>(a - 1)], im[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(im));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  auto im = identity(n).images_;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1U] = static_cast<std::uint8_t>(i + 1);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("permutation degree mismatch");
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i] - 1U];
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size() + 1, false);
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    any = true;
    os << '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = (*this)(x);
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(images_[i]);
  }
  os << ']';
  return os.str();
}

ElementSet apply(const Permutation& p, const ElementSet& a) {
  if (p.degree() != a.ground_size()) throw InvalidArgument("permutation/set ground-size mismatch");
  std::uint64_t bits = 0;
  for (std::uint64_t b = a.bits(); b != 0; b &= b - 1) {
    bits |= std::uint64_t{1} << p(std::countr_zero(b));
  }
  return ElementSet(a.ground_size(), bits);
}

}  // namespace pgeom
