#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgeom/cliques.hpp"
#include "pgeom/element_set.hpp"
#include "pgeom/permutation.hpp"

namespace pgeom {

/// Symmetric (4t-1, 2t, t)-design on points 1..v; blocks keep their order.
class Design {
 public:
  /// Throws InvariantViolation naming the first failing condition: block
  /// count, block size, or the first pair of blocks whose intersection is
  /// not t.
  explicit Design(std::vector<ElementSet> blocks);

  int v() const { return static_cast<int>(blocks_.size()); }
  int block_size() const { return (v() + 1) / 2; }
  int lambda() const { return (v() + 1) / 4; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const ElementSet& block(std::size_t i) const { return blocks_[i]; }

  /// Position of `b` among the blocks, or -1.
  int find_block(const ElementSet& b) const;
  /// Same block set, order ignored.
  bool same_blocks(const Design& other) const;
  /// Design with every block mapped through p.
  Design relabel(const Permutation& p) const;
  /// True if p maps the block set onto itself / onto other's block set.
  bool maps_onto(const Permutation& p, const Design& other) const;

  Clique to_clique() const { return Clique(blocks_); }

 private:
  std::vector<ElementSet> blocks_;
};

/// Throws InvariantViolation if c does not have n = ground-size points, or
/// any two blocks fail to meet in m points.
Design design_from_clique(const Clique& c);

/// Square matrix with entries +1 / -1.
class HadamardMatrix {
 public:
  HadamardMatrix(int order, std::vector<std::int8_t> entries);

  int order() const { return order_; }
  int at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * order_ + col)];
  }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  /// Row dot products: 0 off the diagonal.
  bool is_hadamard() const;
  /// First row and first column all +1.
  bool is_normalized() const;
  /// Gram matrix H H^T, row-major.
  std::vector<int> gram() const;

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  int order_;
  std::vector<std::int8_t> entries_;
};

/// Border of +1; interior entry (i, j) is -1 exactly when point j lies on
/// block i. Throws InvariantViolation if the result is not Hadamard.
HadamardMatrix to_hadamard(const Design& d);
/// Inverse of to_hadamard. Throws InvariantViolation if h is not normalized
/// or not Hadamard.
Design from_hadamard(const HadamardMatrix& h);

// Text formats. Blank lines and lines starting with '#' are ignored.

/// v lines of v characters '0'/'1'; row i is block i, column j is point j.
std::string format_incidence(const Design& d);
/// Throws ParseError on ragged / non-square / non-0/1 input; the design
/// invariants are then checked by the Design constructor.
Design parse_incidence(std::string_view text);
/// Rows of the incidence matrix only, no design checks.
std::vector<ElementSet> parse_incidence_rows(std::string_view text);

enum class HadamardStyle {
  PlusMinus,  // '+' / '-'
  ZeroOne,    // 0 for +1, 1 for -1
};
std::string format_hadamard(const HadamardMatrix& h, HadamardStyle style);
/// Accepts either style; '−' (U+2212) is read as '-'.
HadamardMatrix parse_hadamard(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pgeom
