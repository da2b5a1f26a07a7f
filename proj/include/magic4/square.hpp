#ifndef MAGIC4_SQUARE_HPP
#define MAGIC4_SQUARE_HPP

// Order-4 squares, their ten lines, and the additive magic predicates.
//
// Convention: a *line* is a row, a column, or one of the two main
// diagonals (broken diagonals do not count), so an order-4 square has
// exactly ten lines. Normal squares hold the entries 0..15, not 1..16;
// inputs using the 1-based convention must be shifted at the I/O
// boundary. The magic constant of a normal order-4 square is 30.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace magic4 {

inline constexpr int kOrder = 4;
inline constexpr int kCellCount = kOrder * kOrder;
inline constexpr int kLineCount = 10;

// Thrown when a should-be-impossible internal invariant fails.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

struct Line {
  std::array<Cell, kOrder> cells;
};

namespace detail {

// Row-major cell indices of the ten lines, in the fixed order
// rows 0-3, columns 0-3, main diagonal, anti-diagonal.
inline constexpr std::array<std::array<int, 4>, kLineCount> kLineCells = {{
    {0, 1, 2, 3},
    {4, 5, 6, 7},
    {8, 9, 10, 11},
    {12, 13, 14, 15},
    {0, 4, 8, 12},
    {1, 5, 9, 13},
    {2, 6, 10, 14},
    {3, 7, 11, 15},
    {0, 5, 10, 15},
    {3, 6, 9, 12},
}};

}  // namespace detail

// The ten lines in fixed order: rows 0-3, columns 0-3, main diagonal
// (0,0)..(3,3), anti-diagonal (0,3)..(3,0).
inline const std::array<Line, kLineCount>& lines() {
  static const std::array<Line, kLineCount> all = [] {
    std::array<Line, kLineCount> out{};
    for (int i = 0; i < kLineCount; ++i)
      for (int j = 0; j < kOrder; ++j) {
        int cell = detail::kLineCells[i][j];
        out[i].cells[j] = Cell{cell / kOrder, cell % kOrder};
      }
    return out;
  }();
  return all;
}

// Human-readable name of lines()[i], for diagnostics.
inline std::string line_name(int line_index) {
  if (line_index < 0 || line_index >= kLineCount)
    throw std::out_of_range("line_name: index must be 0..9");
  if (line_index < 4) return "row " + std::to_string(line_index);
  if (line_index < 8) return "column " + std::to_string(line_index - 4);
  return line_index == 8 ? "main diagonal" : "anti-diagonal";
}

// A 4x4 grid of non-negative integers, row-major. Values compare and
// sort lexicographically on the row-major entry sequence.
class Square {
 public:
  Square() : cells_{} {}

  explicit Square(const std::array<int, kCellCount>& entries) : cells_(entries) {
    for (int v : cells_)
      if (v < 0) throw std::invalid_argument("Square: entries must be non-negative");
  }

  static Square from_rows(const std::array<std::array<int, 4>, 4>& rows) {
    std::array<int, kCellCount> flat{};
    for (int r = 0; r < kOrder; ++r)
      for (int c = 0; c < kOrder; ++c) flat[kOrder * r + c] = rows[r][c];
    return Square(flat);
  }

  // Rejects anything that is not exactly 16 values.
  static Square from_values(const std::vector<int>& values) {
    if (values.size() != kCellCount)
      throw std::invalid_argument("Square: expected 16 entries, got " +
                                  std::to_string(values.size()));
    std::array<int, kCellCount> flat{};
    std::copy(values.begin(), values.end(), flat.begin());
    return Square(flat);
  }

  int at(int row, int col) const { return cells_[kOrder * row + col]; }
  const std::array<int, kCellCount>& entries() const { return cells_; }

  friend auto operator<=>(const Square&, const Square&) = default;

 private:
  std::array<int, kCellCount> cells_;
};

// Sum over each of the ten lines, in lines() order.
inline std::array<std::int64_t, kLineCount> line_sums(const Square& sq) {
  std::array<std::int64_t, kLineCount> sums{};
  const auto& e = sq.entries();
  for (int i = 0; i < kLineCount; ++i) {
    std::int64_t s = 0;
    for (int cell : detail::kLineCells[i]) s += e[cell];
    sums[i] = s;
  }
  return sums;
}

// Magic constant n(n^2-1)/2 of a normal additive square of order n
// (entries 0..n^2-1). 30 for order 4.
inline std::int64_t additive_magic_constant(int n) {
  if (n < 1) throw std::domain_error("additive_magic_constant: order must be >= 1");
  std::int64_t m = n;
  return m * (m * m - 1) / 2;
}

struct MagicReport {
  bool is_magic = false;
  std::optional<std::int64_t> constant;  // present iff is_magic
  bool is_normal = false;                // entries exactly {0..15} and magic
  friend bool operator==(const MagicReport&, const MagicReport&) = default;
};

inline MagicReport check_additive(const Square& sq) {
  MagicReport report;
  auto sums = line_sums(sq);
  report.is_magic =
      std::all_of(sums.begin(), sums.end(), [&](std::int64_t s) { return s == sums[0]; });
  if (report.is_magic) report.constant = sums[0];
  std::uint32_t seen = 0;
  for (int v : sq.entries()) {
    if (v >= kCellCount) return report;  // is_normal stays false
    seen |= 1u << v;
  }
  report.is_normal = report.is_magic && seen == 0xFFFFu;
  return report;
}

}  // namespace magic4

#endif  // MAGIC4_SQUARE_HPP
