#ifndef MAGIC4_SYMMETRY_HPP
#define MAGIC4_SYMMETRY_HPP

// The two group actions on order-4 squares:
//
//   * D8, the symmetry group of the square (rotations and reflections),
//     acting on cell positions. rot90 is the clockwise quarter turn.
//   * S4 permuting the four bit positions of 0..15-valued entries.
//     Bit positions are numbered 0..3 with position 0 the most
//     significant bit (weight 8); position i carries prime p_{i+1} on
//     the multiplicative side, so the smallest prime rides the MSB.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "magic4/square.hpp"

namespace magic4 {

enum class D8 : std::uint8_t {
  identity = 0,
  rot90,
  rot180,
  rot270,
  flip_h,  // left-right mirror
  flip_v,  // top-bottom mirror
  transpose,
  anti_transpose,
};

inline constexpr std::array<D8, 8> all_d8 = {
    D8::identity, D8::rot90,  D8::rot180,    D8::rot270,
    D8::flip_h,   D8::flip_v, D8::transpose, D8::anti_transpose,
};

inline const char* d8_name(D8 g) {
  switch (g) {
    case D8::identity: return "identity";
    case D8::rot90: return "rot90";
    case D8::rot180: return "rot180";
    case D8::rot270: return "rot270";
    case D8::flip_h: return "flip-horizontal";
    case D8::flip_v: return "flip-vertical";
    case D8::transpose: return "transpose";
    case D8::anti_transpose: return "anti-transpose";
  }
  throw std::invalid_argument("d8_name: bad element");
}

// Cell of the original square that g moves into position (row, col).
constexpr Cell d8_source(D8 g, int row, int col) {
  switch (g) {
    case D8::identity: return {row, col};
    case D8::rot90: return {3 - col, row};
    case D8::rot180: return {3 - row, 3 - col};
    case D8::rot270: return {col, 3 - row};
    case D8::flip_h: return {row, 3 - col};
    case D8::flip_v: return {3 - row, col};
    case D8::transpose: return {col, row};
    case D8::anti_transpose: return {3 - col, 3 - row};
  }
  throw std::invalid_argument("d8_source: bad element");
}

namespace detail {

constexpr std::array<std::uint8_t, kCellCount> d8_source_perm(D8 g) {
  std::array<std::uint8_t, kCellCount> perm{};
  for (int r = 0; r < kOrder; ++r)
    for (int c = 0; c < kOrder; ++c) {
      Cell s = d8_source(g, r, c);
      perm[kOrder * r + c] = static_cast<std::uint8_t>(kOrder * s.row + s.col);
    }
  return perm;
}

constexpr D8 d8_match(const std::array<std::uint8_t, kCellCount>& perm) {
  for (auto g : all_d8)
    if (d8_source_perm(g) == perm) return g;
  throw internal_error("D8 is not closed under composition");
}

// Explicit 8x8 composition table, built at compile time from the cell
// permutations; compile fails if the eight elements were not closed.
constexpr std::array<std::array<D8, 8>, 8> make_d8_composition_table() {
  std::array<std::array<D8, 8>, 8> table{};
  for (auto a : all_d8)
    for (auto b : all_d8) {
      auto pa = d8_source_perm(a);
      auto pb = d8_source_perm(b);
      // b first, then a: out[i] = mid[pa[i]] = in[pb[pa[i]]]
      std::array<std::uint8_t, kCellCount> composed{};
      for (int i = 0; i < kCellCount; ++i) composed[i] = pb[pa[i]];
      table[static_cast<int>(a)][static_cast<int>(b)] = d8_match(composed);
    }
  return table;
}

inline constexpr auto kD8Compose = make_d8_composition_table();

constexpr std::array<std::uint8_t, kCellCount> kIdentityPerm = d8_source_perm(D8::identity);

constexpr std::array<D8, 8> make_d8_inverse_table() {
  std::array<D8, 8> inv{};
  for (auto g : all_d8)
    for (auto h : all_d8)
      if (kD8Compose[static_cast<int>(h)][static_cast<int>(g)] == D8::identity)
        inv[static_cast<int>(g)] = h;
  return inv;
}

inline constexpr auto kD8Inverse = make_d8_inverse_table();

}  // namespace detail

// Composition acting right-to-left: apply_d8(d8_compose(a, b), x) ==
// apply_d8(a, apply_d8(b, x)).
constexpr D8 d8_compose(D8 a, D8 b) {
  return detail::kD8Compose[static_cast<int>(a)][static_cast<int>(b)];
}

constexpr D8 d8_inverse(D8 g) { return detail::kD8Inverse[static_cast<int>(g)]; }

inline Square apply_d8(D8 g, const Square& sq) {
  const auto perm = detail::d8_source_perm(g);
  const auto& in = sq.entries();
  std::array<int, kCellCount> out{};
  for (int i = 0; i < kCellCount; ++i) out[i] = in[perm[i]];
  return Square(out);
}

// Lexicographically smallest of the eight D8 images; the orbit
// representative used everywhere counting happens "up to symmetries".
inline Square canonical_d8(const Square& sq) {
  Square best = sq;
  for (auto g : all_d8) {
    Square image = apply_d8(g, sq);
    if (image < best) best = image;
  }
  return best;
}

// A bijection on the four bit positions. target(i) is where the bit at
// position i goes; position 0 is the MSB (weight 8, prime p1).
class BitPerm {
 public:
  BitPerm() : to_{0, 1, 2, 3} {}

  explicit BitPerm(const std::array<int, 4>& to) : to_(to) {
    std::uint32_t seen = 0;
    for (int t : to_) {
      if (t < 0 || t > 3) throw std::invalid_argument("BitPerm: positions are 0..3");
      seen |= 1u << t;
    }
    if (seen != 0xFu) throw std::invalid_argument("BitPerm: not a bijection");
  }

  int target(int pos) const { return to_[pos]; }

  bool is_identity() const { return to_ == std::array<int, 4>{0, 1, 2, 3}; }

  // Moves the bit at position i to position target(i); value must be 0..15.
  int apply_to_value(int value) const {
    if (value < 0 || value > 15)
      throw std::out_of_range("BitPerm: entry " + std::to_string(value) +
                              " is not a 4-bit value");
    int out = 0;
    for (int i = 0; i < 4; ++i) out |= ((value >> (3 - i)) & 1) << (3 - to_[i]);
    return out;
  }

  friend auto operator<=>(const BitPerm&, const BitPerm&) = default;

 private:
  std::array<int, 4> to_;
};

// b first, then a.
inline BitPerm bitperm_compose(const BitPerm& a, const BitPerm& b) {
  std::array<int, 4> to{};
  for (int i = 0; i < 4; ++i) to[i] = a.target(b.target(i));
  return BitPerm(to);
}

inline BitPerm bitperm_inverse(const BitPerm& p) {
  std::array<int, 4> to{};
  for (int i = 0; i < 4; ++i) to[p.target(i)] = i;
  return BitPerm(to);
}

// All 24 bit permutations in lexicographic order of their target arrays;
// the identity comes first.
inline const std::vector<BitPerm>& all_bit_perms() {
  static const std::vector<BitPerm> all = [] {
    std::vector<BitPerm> out;
    std::array<int, 4> to = {0, 1, 2, 3};
    do {
      out.emplace_back(to);
    } while (std::next_permutation(to.begin(), to.end()));
    return out;
  }();
  return all;
}

// Permutes the bit positions of every entry; rejects entries >= 16.
inline Square apply_bitperm(const BitPerm& p, const Square& sq) {
  std::array<int, kCellCount> out{};
  for (int i = 0; i < kCellCount; ++i) out[i] = p.apply_to_value(sq.entries()[i]);
  return Square(out);
}

namespace detail {

// 0..15-valued squares pack into one nibble per cell.
inline std::uint64_t pack_square(const Square& sq) {
  std::uint64_t key = 0;
  for (int v : sq.entries()) key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

}  // namespace detail

// Number of distinct images of sq under all 24 bit permutations.
inline int orbit_size_s4(const Square& sq) {
  std::vector<std::uint64_t> images;
  images.reserve(24);
  for (const auto& p : all_bit_perms())
    images.push_back(detail::pack_square(apply_bitperm(p, sq)));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return static_cast<int>(images.size());
}

}  // namespace magic4

#endif  // MAGIC4_SYMMETRY_HPP
