#ifndef MAGIC4_ENUMERATE_HPP
#define MAGIC4_ENUMERATE_HPP

// Exhaustive enumeration of the normal additive magic squares of order 4
// (there are 7040, forming 880 D8 orbits) and the closed-form count of
// order-3 semi-magic squares with its brute-force cross-check.
//
// The search fills cells in row-major order. Whenever three cells of a
// line are placed the fourth is forced to 30 minus the partial sum, so
// only the nine cells outside the last row/column/forced diagonal spots
// ever branch; one-step lookahead prunes assignments whose forced
// completions are already impossible. Results are sorted row-major
// lexicographically, independent of search order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "magic4/square.hpp"
#include "magic4/symmetry.hpp"

namespace magic4 {

struct EnumerationResult {
  std::vector<Square> squares;      // sorted, pairwise distinct
  std::size_t total = 0;            // == squares.size()
  std::size_t d8_orbit_count = 0;   // distinct canonical_d8 images
};

namespace detail {

struct CellLines {
  std::array<int, 3> line{};  // line ids through this cell
  int count = 0;
};

inline constexpr std::array<CellLines, kCellCount> make_cell_lines() {
  std::array<CellLines, kCellCount> out{};
  for (int li = 0; li < kLineCount; ++li)
    for (int cell : kLineCells[li]) out[cell].line[out[cell].count++] = li;
  return out;
}

inline constexpr auto kCellLines = make_cell_lines();

class MagicSquareSearch {
 public:
  std::vector<Square> run() {
    results_.clear();
    search(0);
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  static constexpr int kTarget = 30;

  void search(int cell) {
    if (cell == kCellCount) {
      results_.emplace_back(grid_);
      return;
    }
    const auto& through = kCellLines[cell];

    int forced = -1;
    for (int j = 0; j < through.count; ++j) {
      int li = through.line[j];
      if (filled_[li] != 3) continue;
      int v = kTarget - partial_[li];
      if (v < 0 || v > 15 || ((used_ >> v) & 1)) return;
      if (forced >= 0 && forced != v) return;
      forced = v;
    }
    if (forced >= 0) {
      try_value(cell, forced);
      return;
    }
    for (int v = 0; v < kCellCount; ++v) {
      if ((used_ >> v) & 1) continue;
      try_value(cell, v);
    }
  }

  void try_value(int cell, int v) {
    const auto& through = kCellLines[cell];
    for (int j = 0; j < through.count; ++j) {
      int li = through.line[j];
      int sum = partial_[li] + v;
      int fill = filled_[li] + 1;
      if (fill == 4) {
        if (sum != kTarget) return;
      } else {
        if (sum > kTarget) return;
        if (fill == 3) {
          // the line's last cell is now forced; bail if that value is gone
          int w = kTarget - sum;
          if (w < 0 || w > 15 || w == v || ((used_ >> w) & 1)) return;
        }
      }
    }
    grid_[cell] = v;
    used_ |= 1u << v;
    for (int j = 0; j < through.count; ++j) {
      int li = through.line[j];
      partial_[li] += v;
      ++filled_[li];
    }
    search(cell + 1);
    used_ &= ~(1u << v);
    for (int j = 0; j < through.count; ++j) {
      int li = through.line[j];
      partial_[li] -= v;
      --filled_[li];
    }
  }

  std::array<int, kCellCount> grid_{};
  std::array<int, kLineCount> partial_{};
  std::array<int, kLineCount> filled_{};
  std::uint32_t used_ = 0;
  std::vector<Square> results_;
};

inline const std::vector<Square>& normal_squares() {
  static const std::vector<Square> cache = [] {
    MagicSquareSearch search;
    return search.run();
  }();
  return cache;
}

inline std::size_t count_d8_orbits(const std::vector<Square>& squares) {
  std::vector<std::uint64_t> keys;
  keys.reserve(squares.size());
  for (const auto& sq : squares) keys.push_back(pack_square(canonical_d8(sq)));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys.size();
}

inline std::size_t normal_d8_orbit_count() {
  static const std::size_t count = count_d8_orbits(normal_squares());
  return count;
}

}  // namespace detail

// All 7040 normal additive magic squares of order 4, sorted row-major
// lexicographically. Deterministic; the census is computed once per
// process and copied out.
inline EnumerationResult enumerate_normal_additive() {
  EnumerationResult result;
  result.squares = detail::normal_squares();
  result.total = result.squares.size();
  result.d8_orbit_count = detail::normal_d8_orbit_count();
  return result;
}

namespace detail {

// C(n, 4), exact; overflow past 64 bits is rejected.
inline std::uint64_t binomial4(std::int64_t n) {
  if (n < 4) return 0;
  unsigned __int128 p = 1;
  for (int i = 0; i < 4; ++i) p *= static_cast<unsigned __int128>(n - i);
  p /= 24;
  if (p > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error("count_semimagic_order3: result exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

}  // namespace detail

// Number of 3x3 non-negative integer matrices whose rows and columns all
// sum to line_sum: C(r+4,4) + C(r+3,4) + C(r+2,4).
inline std::uint64_t count_semimagic_order3(int line_sum) {
  if (line_sum < 0)
    throw std::domain_error("count_semimagic_order3: line sum must be >= 0");
  std::int64_t r = line_sum;
  return detail::binomial4(r + 4) + detail::binomial4(r + 3) + detail::binomial4(r + 2);
}

// Direct enumeration for the same count: the 2x2 upper-left block ranges
// over [0,r]^4 and determines the rest, O((r+1)^4) instead of (r+1)^9.
// Must stay independent of the closed form above; it is its oracle.
inline std::uint64_t brute_semimagic_order3(int line_sum) {
  if (line_sum < 0 || line_sum > 8)
    throw std::domain_error("brute_semimagic_order3: line sum must be in 0..8");
  const int r = line_sum;
  std::uint64_t count = 0;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b)
      for (int d = 0; d <= r; ++d)
        for (int e = 0; e <= r; ++e) {
          int c = r - a - b;        // row 0
          int f = r - d - e;        // row 1
          int g = r - a - d;        // column 0
          int h = r - b - e;        // column 1
          int i = a + b + d + e - r;  // forced corner; rows/columns then balance
          if (c >= 0 && f >= 0 && g >= 0 && h >= 0 && i >= 0) ++count;
        }
  return count;
}

}  // namespace magic4

#endif  // MAGIC4_ENUMERATE_HPP
