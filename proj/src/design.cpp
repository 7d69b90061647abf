#include "pgeom/design.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pgeom {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

}  // namespace

Design::Design(std::vector<ElementSet> blocks) : blocks_(std::move(blocks)) {
  const int v = static_cast<int>(blocks_.size());
  if (v < 3 || (v + 1) % 4 != 0) {
    throw InvariantViolation("a symmetric (4t-1, 2t, t)-design needs 4t-1 blocks, got " +
                             std::to_string(v));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].ground_size() != v) {
      throw InvariantViolation("block " + std::to_string(i + 1) + " is not over " +
                               std::to_string(v) + " points");
    }
    if (blocks_[i].size() != block_size()) {
      throw InvariantViolation("block " + std::to_string(i + 1) + " has " +
                               std::to_string(blocks_[i].size()) + " points, expected " +
                               std::to_string(block_size()));
    }
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      const int meet = intersection_size(blocks_[i], blocks_[j]);
      if (meet != lambda()) {
        throw InvariantViolation("blocks " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " meet in " + std::to_string(meet) +
                                 " points, expected " + std::to_string(lambda()));
      }
    }
  }
}

int Design::find_block(const ElementSet& b) const {
  auto it = std::find(blocks_.begin(), blocks_.end(), b);
  return it == blocks_.end() ? -1 : static_cast<int>(it - blocks_.begin());
}

bool Design::same_blocks(const Design& other) const {
  auto a = blocks_;
  auto b = other.blocks_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Design Design::relabel(const Permutation& p) const {
  std::vector<ElementSet> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(apply(p, b));
  return Design(std::move(out));
}

bool Design::maps_onto(const Permutation& p, const Design& other) const {
  if (p.degree() != v() || other.v() != v()) return false;
  std::vector<ElementSet> image;
  for (const auto& b : blocks_) image.push_back(apply(p, b));
  std::sort(image.begin(), image.end());
  auto target = other.blocks_;
  std::sort(target.begin(), target.end());
  return image == target;
}

Design design_from_clique(const Clique& c) {
  if (c.empty() || c.size() != static_cast<std::size_t>(c.ground_size())) {
    throw InvariantViolation("a design needs a clique of exactly n points, got " +
                             std::to_string(c.size()));
  }
  return Design(c.points());
}

HadamardMatrix::HadamardMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order < 1 || entries_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw InvalidArgument("Hadamard matrix entry count does not match its order");
  }
  for (auto e : entries_) {
    if (e != 1 && e != -1) throw InvalidArgument("Hadamard entries must be +1 or -1");
  }
}

std::vector<int> HadamardMatrix::gram() const {
  std::vector<int> g(static_cast<std::size_t>(order_ * order_), 0);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      int dot = 0;
      for (int k = 0; k < order_; ++k) dot += at(i, k) * at(j, k);
      g[static_cast<std::size_t>(i * order_ + j)] = dot;
    }
  }
  return g;
}

bool HadamardMatrix::is_hadamard() const {
  const auto g = gram();
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      if (i != j && g[static_cast<std::size_t>(i * order_ + j)] != 0) return false;
    }
  }
  return true;
}

bool HadamardMatrix::is_normalized() const {
  for (int i = 0; i < order_; ++i) {
    if (at(0, i) != 1 || at(i, 0) != 1) return false;
  }
  return true;
}

HadamardMatrix to_hadamard(const Design& d) {
  const int order = d.v() + 1;
  std::vector<std::int8_t> e(static_cast<std::size_t>(order * order), 1);
  for (int i = 1; i < order; ++i) {
    for (int j = 1; j < order; ++j) {
      if (d.block(static_cast<std::size_t>(i - 1)).contains(j)) {
        e[static_cast<std::size_t>(i * order + j)] = -1;
      }
    }
  }
  HadamardMatrix h(order, std::move(e));
  if (!h.is_hadamard()) throw InvariantViolation("incidence matrix does not yield a Hadamard matrix");
  return h;
}

Design from_hadamard(const HadamardMatrix& h) {
  if (!h.is_normalized()) throw InvariantViolation("Hadamard matrix is not normalized");
  if (!h.is_hadamard()) throw InvariantViolation("rows are not orthogonal");
  const int v = h.order() - 1;
  std::vector<ElementSet> blocks;
  for (int i = 1; i <= v; ++i) {
    std::uint64_t bits = 0;
    for (int j = 1; j <= v; ++j) {
      if (h.at(i, j) == -1) bits |= std::uint64_t{1} << j;
    }
    blocks.emplace_back(v, bits);
  }
  return Design(std::move(blocks));
}

std::string format_incidence(const Design& d) {
  std::string out;
  for (const auto& b : d.blocks()) {
    for (int j = 1; j <= d.v(); ++j) out.push_back(b.contains(j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::vector<ElementSet> parse_incidence_rows(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("incidence matrix is empty");
  const std::size_t v = lines.size();
  if (v > static_cast<std::size_t>(kMaxGround)) throw ParseError("incidence matrix too large");
  std::vector<ElementSet> rows;
  for (std::size_t i = 0; i < v; ++i) {
    if (lines[i].size() != v) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(lines[i].size()) +
                       " entries; matrix must be " + std::to_string(v) + "x" + std::to_string(v));
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < v; ++j) {
      const char ch = lines[i][j];
      if (ch == '1') {
        bits |= std::uint64_t{1} << (j + 1);
      } else if (ch != '0') {
        throw ParseError("row " + std::to_string(i + 1) + " has non-0/1 character '" +
                         std::string(1, ch) + "'");
      }
    }
    rows.emplace_back(static_cast<int>(v), bits);
  }
  return rows;
}

Design parse_incidence(std::string_view text) { return Design(parse_incidence_rows(text)); }

std::string format_hadamard(const HadamardMatrix& h, HadamardStyle style) {
  std::string out;
  for (int i = 0; i < h.order(); ++i) {
    for (int j = 0; j < h.order(); ++j) {
      const bool plus = h.at(i, j) == 1;
      if (style == HadamardStyle::PlusMinus) {
        out.push_back(plus ? '+' : '-');
      } else {
        out.push_back(plus ? '0' : '1');
      }
    }
    out.push_back('\n');
  }
  return out;
}

HadamardMatrix parse_hadamard(std::string_view text) {
  std::string normalized;
  // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      normalized.push_back('-');
      i += 2;
    } else {
      normalized.push_back(text[i]);
    }
  }
  const auto lines = content_lines(normalized);
  if (lines.empty()) throw ParseError("Hadamard matrix is empty");
  const std::size_t order = lines.size();
  std::vector<std::int8_t> entries;
  bool plus_minus = false;
  bool zero_one = false;
  for (std::size_t i = 0; i < order; ++i) {
    if (lines[i].size() != order) {
      throw ParseError("Hadamard row " + std::to_string(i + 1) + " has wrong length");
    }
    for (char ch : lines[i]) {
      switch (ch) {
        case '+': plus_minus = true; entries.push_back(1); break;
        case '-': plus_minus = true; entries.push_back(-1); break;
        case '0': zero_one = true; entries.push_back(1); break;
        case '1': zero_one = true; entries.push_back(-1); break;
        default:
          throw ParseError("Hadamard row " + std::to_string(i + 1) + " has invalid character '" +
                           std::string(1, ch) + "'");
      }
    }
  }
  if (plus_minus && zero_one) throw ParseError("Hadamard matrix mixes +/- and 0/1 notation");
  return HadamardMatrix(static_cast<int>(order), std::move(entries));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace pgeom
