#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgeom {

/// Fixed-capacity bitset over vertex indices 0..capacity-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0), capacity_(capacity) {}

  std::size_t capacity() const { return capacity_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// |this ∩ other| without materialising the intersection.
  std::size_t count_and(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// this \ o
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t capacity_ = 0;
};

}  // namespace pgeom
