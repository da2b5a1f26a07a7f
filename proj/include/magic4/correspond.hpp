#ifndef MAGIC4_CORRESPOND_HPP
#define MAGIC4_CORRESPOND_HPP

// The correspondence f between multiplicative and additive squares.
//
// A multiplicative square over primes p1 < p2 < p3 < p4 stores each
// entry as a 4-bit divisibility mask; f reads the mask as a binary
// number with p1 on the most significant bit, so the mask *is* the
// additive entry (p1*p2*p3 -> 1110 -> 14). An additive square is
// *compatible* (lies in the image of f on normal squares) iff every
// line carries every bit exactly twice — equivalently, each prime
// divides exactly two entries of every line.
//
// Line products are compared through their prime-exponent vectors, so
// the magic test never multiplies anything out and stays exact for any
// basis whose product fits in 64 bits; the reported constant (k^2 for
// normal squares) is materialized in 128 bits.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "magic4/enumerate.hpp"
#include "magic4/square.hpp"
#include "magic4/symmetry.hpp"

namespace magic4 {

namespace detail {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d : {2, 3}) {
    if (n % d == 0) return n == d;
  }
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Four distinct primes in ascending order; k is their product.
class PrimeBasis {
 public:
  explicit PrimeBasis(const std::array<std::int64_t, 4>& primes) : primes_(primes) {
    for (int i = 0; i < 4; ++i) {
      if (!detail::is_prime(primes_[i]))
        throw std::invalid_argument("PrimeBasis: " + std::to_string(primes_[i]) +
                                    " is not prime");
      if (i > 0 && primes_[i - 1] >= primes_[i])
        throw std::invalid_argument("PrimeBasis: primes must be strictly ascending");
    }
    product_ = 1;
    for (std::int64_t p : primes_)
      if (__builtin_mul_overflow(product_, p, &product_))
        throw std::invalid_argument("PrimeBasis: product overflows 64 bits");
  }

  // p1..p4 as indices 0..3.
  std::int64_t prime(int i) const { return primes_.at(i); }
  const std::array<std::int64_t, 4>& primes() const { return primes_; }
  std::int64_t product() const { return product_; }

  friend bool operator==(const PrimeBasis&, const PrimeBasis&) = default;

 private:
  std::array<std::int64_t, 4> primes_;
  std::int64_t product_;
};

// 4x4 grid of prime-subset masks over a basis. Mask bit (3-i) says that
// prime i divides the entry, putting p1 on the MSB; the stored mask is
// therefore exactly the additive entry under f. Entry values are
// derived on demand, so arithmetic stays exact.
class MultSquare {
 public:
  MultSquare(const PrimeBasis& basis, const std::array<std::uint8_t, kCellCount>& masks)
      : basis_(basis), masks_(masks) {
    for (auto m : masks_)
      if (m > 15) throw std::invalid_argument("MultSquare: masks are 4-bit values");
  }

  const PrimeBasis& basis() const { return basis_; }
  std::uint8_t mask(int row, int col) const { return masks_[kOrder * row + col]; }
  const std::array<std::uint8_t, kCellCount>& masks() const { return masks_; }

  std::int64_t value(int row, int col) const {
    std::int64_t v = 1;
    for (int i = 0; i < 4; ++i)
      if ((mask(row, col) >> (3 - i)) & 1) v *= basis_.prime(i);
    return v;
  }

  std::array<std::int64_t, kCellCount> values() const {
    std::array<std::int64_t, kCellCount> out{};
    for (int r = 0; r < kOrder; ++r)
      for (int c = 0; c < kOrder; ++c) out[kOrder * r + c] = value(r, c);
    return out;
  }

  friend bool operator==(const MultSquare&, const MultSquare&) = default;

 private:
  PrimeBasis basis_;
  std::array<std::uint8_t, kCellCount> masks_;
};

struct MultReport {
  bool is_magic = false;
  bool is_normal = false;  // all 16 divisors of k appear exactly once, and magic
  std::optional<unsigned __int128> constant;  // k^2 when normal
  friend bool operator==(const MultReport&, const MultReport&) = default;
};

// Renders the (possibly 128-bit) multiplicative constant in decimal.
inline std::string constant_to_string(unsigned __int128 v) {
  return detail::u128_to_string(v);
}

// f: the additive image; entry (i,j) is the mask of (i,j) read as a
// 4-bit binary number, MSB = p1.
inline Square apply_f(const MultSquare& m) {
  std::array<int, kCellCount> entries{};
  for (int i = 0; i < kCellCount; ++i) entries[i] = m.masks()[i];
  return Square(entries);
}

// Generalized inverse of f, total on {0..15}-valued squares. The result
// is a normal multiplicative magic square exactly when the input is
// normal and compatible; check_multiplicative reports which.
inline MultSquare f_inverse(const Square& a, const PrimeBasis& basis) {
  std::array<std::uint8_t, kCellCount> masks{};
  for (int i = 0; i < kCellCount; ++i) {
    int v = a.entries()[i];
    if (v < 0 || v > 15)
      throw std::out_of_range("f_inverse: entry " + std::to_string(v) +
                              " at cell " + std::to_string(i / 4) + "," +
                              std::to_string(i % 4) + " is outside 0..15");
    masks[i] = static_cast<std::uint8_t>(v);
  }
  return MultSquare(basis, masks);
}

namespace detail {

// Per-line occurrence count of each bit position (MSB first).
inline std::array<int, 4> line_bit_counts(const Square& sq, int line_index) {
  std::array<int, 4> counts{};
  for (int cell : kLineCells[line_index]) {
    int v = sq.entries()[cell];
    for (int b = 0; b < 4; ++b) counts[b] += (v >> (3 - b)) & 1;
  }
  return counts;
}

}  // namespace detail

// First (line, bit position) where a bit occurs other than exactly twice,
// or nullopt when the square is compatible. Meaningful on normal squares.
struct BitViolation {
  int line_index;
  int bit_position;  // 0 = MSB (weight 8, prime p1)
  int count;
};

inline std::optional<BitViolation> first_bit_violation(const Square& a) {
  for (int li = 0; li < kLineCount; ++li) {
    auto counts = detail::line_bit_counts(a, li);
    for (int b = 0; b < 4; ++b)
      if (counts[b] != 2) return BitViolation{li, b, counts[b]};
  }
  return std::nullopt;
}

// True iff each of the ten lines carries each of the four bits exactly
// twice. Input must be a normal additive magic square.
inline bool is_compatible(const Square& a) {
  if (!check_additive(a).is_normal)
    throw std::invalid_argument("is_compatible: square is not a normal additive magic square");
  return !first_bit_violation(a).has_value();
}

namespace detail {

inline const std::vector<Square>& compatible_squares() {
  static const std::vector<Square> cache = [] {
    std::vector<Square> out;
    for (const auto& sq : normal_squares())
      if (!first_bit_violation(sq).has_value()) out.push_back(sq);
    return out;
  }();
  return cache;
}

}  // namespace detail

struct CompatibleCensus {
  std::size_t total = 0;      // 4224
  std::size_t d8_orbits = 0;  // 528
};

// Filters the full enumeration through is_compatible.
inline CompatibleCensus count_compatible() {
  static const CompatibleCensus census = [] {
    const auto& squares = detail::compatible_squares();
    return CompatibleCensus{squares.size(), detail::count_d8_orbits(squares)};
  }();
  return census;
}

inline MultReport check_multiplicative(const MultSquare& m) {
  MultReport report;
  // exponent of prime i in the line product = number of entries with bit i
  std::array<std::array<int, 4>, kLineCount> exponents{};
  for (int li = 0; li < kLineCount; ++li)
    for (int cell : detail::kLineCells[li]) {
      int mask = m.masks()[cell];
      for (int b = 0; b < 4; ++b) exponents[li][b] += (mask >> (3 - b)) & 1;
    }
  report.is_magic = std::all_of(exponents.begin(), exponents.end(),
                                [&](const auto& e) { return e == exponents[0]; });
  if (report.is_magic) {
    unsigned __int128 constant = 1;
    constexpr auto limit = ~static_cast<unsigned __int128>(0);
    for (int b = 0; b < 4; ++b) {
      auto p = static_cast<unsigned __int128>(m.basis().prime(b));
      for (int e = 0; e < exponents[0][b]; ++e) {
        if (constant > limit / p)
          throw std::overflow_error("check_multiplicative: constant exceeds 128 bits");
        constant *= p;
      }
    }
    report.constant = constant;
  }
  std::uint32_t seen = 0;
  for (auto mask : m.masks()) seen |= 1u << mask;
  report.is_normal = report.is_magic && seen == 0xFFFFu;
  return report;
}

// Factorizes a grid of positive integers over the basis. Every entry
// must be a squarefree product of basis primes.
inline MultSquare parse_mult_square(const std::array<std::int64_t, kCellCount>& entries,
                                    const PrimeBasis& basis) {
  std::array<std::uint8_t, kCellCount> masks{};
  for (int i = 0; i < kCellCount; ++i) {
    std::int64_t v = entries[i];
    const std::string where =
        " at cell " + std::to_string(i / 4) + "," + std::to_string(i % 4);
    if (v < 1)
      throw std::invalid_argument("parse_mult_square: entry " + std::to_string(v) +
                                  where + " is not positive");
    std::uint8_t mask = 0;
    for (int b = 0; b < 4; ++b) {
      std::int64_t p = basis.prime(b);
      if (v % p == 0) {
        v /= p;
        if (v % p == 0)
          throw std::invalid_argument("parse_mult_square: entry " +
                                      std::to_string(entries[i]) + where +
                                      " is divisible by " + std::to_string(p) +
                                      "^2 (not squarefree)");
        mask |= static_cast<std::uint8_t>(1u << (3 - b));
      }
    }
    if (v != 1)
      throw std::invalid_argument("parse_mult_square: entry " +
                                  std::to_string(entries[i]) + where +
                                  " has a factor outside the basis");
    masks[i] = mask;
  }
  return MultSquare(basis, masks);
}

}  // namespace magic4

#endif  // MAGIC4_CORRESPOND_HPP
