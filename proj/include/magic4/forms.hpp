#ifndef MAGIC4_FORMS_HPP
#define MAGIC4_FORMS_HPP

// Forms: the sixteen 4x4 binary matrices with exactly two ones in every
// line. They are the bit-planes of compatible squares, and every
// weighted combination 8*F1 + 4*F2 + 2*F3 + F4 of forms is an additive
// magic square (constant 30). The five fundamental forms A0, B0, C0,
// D0, E0 generate all sixteen under D8; the orbits A, B, C, D, E have
// sizes 2, 4, 4, 4, 2 and each form's complement lies in its own orbit.
//
// A form is stored as a 16-bit code read row-major with cell (0,0) on
// the most significant bit, so ascending code order is lexicographic
// order on the printed bit matrix.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "magic4/square.hpp"
#include "magic4/symmetry.hpp"

namespace magic4 {

namespace detail {

inline constexpr std::array<std::uint16_t, kLineCount> make_line_masks() {
  std::array<std::uint16_t, kLineCount> masks{};
  for (int li = 0; li < kLineCount; ++li)
    for (int cell : kLineCells[li])
      masks[li] |= static_cast<std::uint16_t>(1u << (15 - cell));
  return masks;
}

inline constexpr auto kLineMasks = make_line_masks();

constexpr bool is_form_code(std::uint16_t code) {
  for (auto mask : kLineMasks)
    if (std::popcount(static_cast<unsigned>(code & mask)) != 2) return false;
  return true;
}

}  // namespace detail

// A 4x4 binary matrix with exactly two ones in every line.
class Form {
 public:
  explicit Form(std::uint16_t code) : code_(code) {
    if (!detail::is_form_code(code))
      throw std::invalid_argument("Form: some line does not have exactly two ones");
  }

  static bool is_form_code(std::uint16_t code) { return detail::is_form_code(code); }

  static Form from_rows(const std::array<std::array<int, 4>, 4>& rows) {
    std::uint16_t code = 0;
    for (int r = 0; r < kOrder; ++r)
      for (int c = 0; c < kOrder; ++c) {
        int bit = rows[r][c];
        if (bit != 0 && bit != 1) throw std::invalid_argument("Form: entries are 0 or 1");
        if (bit) code |= static_cast<std::uint16_t>(1u << (15 - (kOrder * r + c)));
      }
    return Form(code);
  }

  std::uint16_t code() const { return code_; }
  int at(int row, int col) const {
    return (code_ >> (15 - (kOrder * row + col))) & 1;
  }

  std::string row_string(int row) const {
    std::string s;
    for (int c = 0; c < kOrder; ++c) s.push_back(at(row, c) ? '1' : '0');
    return s;
  }

  friend auto operator<=>(const Form&, const Form&) = default;

 private:
  std::uint16_t code_;
};

// All 16 forms, found by brute force over the 65536 binary matrices,
// ascending by row-major bit reading.
inline const std::vector<Form>& enumerate_forms() {
  static const std::vector<Form> all = [] {
    std::vector<Form> out;
    for (std::uint32_t code = 0; code < 65536; ++code)
      if (detail::is_form_code(static_cast<std::uint16_t>(code)))
        out.emplace_back(static_cast<std::uint16_t>(code));
    return out;
  }();
  return all;
}

// The five fundamental forms, bit-for-bit as printed.
struct FundamentalForms {
  Form a0{0x35AC};  // 0011 / 0101 / 1010 / 1100
  Form b0{0x3C3C};  // 0011 / 1100 / 0011 / 1100
  Form c0{0x3CC3};  // 0011 / 1100 / 1100 / 0011
  Form d0{0x5AA5};  // 0101 / 1010 / 1010 / 0101
  Form e0{0x5C3A};  // 0101 / 1100 / 0011 / 1010
};

inline FundamentalForms fundamental_forms() { return FundamentalForms{}; }

inline Form fundamental_form(char letter) {
  FundamentalForms f;
  switch (letter) {
    case 'A': return f.a0;
    case 'B': return f.b0;
    case 'C': return f.c0;
    case 'D': return f.d0;
    case 'E': return f.e0;
  }
  throw std::invalid_argument("fundamental_form: orbit letters are A..E");
}

inline Form apply_d8(D8 g, const Form& x) {
  std::uint16_t code = 0;
  for (int r = 0; r < kOrder; ++r)
    for (int c = 0; c < kOrder; ++c) {
      Cell s = d8_source(g, r, c);
      if (x.at(s.row, s.col)) code |= static_cast<std::uint16_t>(1u << (15 - (kOrder * r + c)));
    }
  return Form(code);
}

// D8 orbit letter plus a stable index: the fundamental form has index 0,
// the other orbit members follow in ascending code order.
struct OrbitLabel {
  char letter = '?';  // 'A'..'E'
  int index = 0;      // 0..1 for A and E, 0..3 for B, C, D

  std::string to_string() const { return std::string(1, letter) + std::to_string(index); }

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

namespace detail {

struct FormOrbits {
  std::array<OrbitLabel, 65536> label_by_code;  // valid only at form codes
  std::map<char, std::vector<Form>> members;    // index order
};

inline const FormOrbits& form_orbits() {
  static const FormOrbits table = [] {
    FormOrbits t{};
    for (char letter : {'A', 'B', 'C', 'D', 'E'}) {
      Form seed = fundamental_form(letter);
      std::vector<Form> orbit;
      for (auto g : all_d8) {
        Form image = apply_d8(g, seed);
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end())
          orbit.push_back(image);
      }
      std::sort(orbit.begin(), orbit.end());
      // fundamental form first, the rest by ascending code
      std::vector<Form> ordered{seed};
      for (const auto& f : orbit)
        if (f != seed) ordered.push_back(f);
      for (std::size_t i = 0; i < ordered.size(); ++i)
        t.label_by_code[ordered[i].code()] = OrbitLabel{letter, static_cast<int>(i)};
      t.members.emplace(letter, std::move(ordered));
    }
    return t;
  }();
  return table;
}

}  // namespace detail

inline OrbitLabel label_form(const Form& x) {
  return detail::form_orbits().label_by_code[x.code()];
}

// Orbit members in index order (fundamental form first).
inline const std::vector<Form>& orbit_members(char letter) {
  const auto& members = detail::form_orbits().members;
  auto it = members.find(letter);
  if (it == members.end())
    throw std::invalid_argument("orbit_members: orbit letters are A..E");
  return it->second;
}

inline Form form_by_label(const OrbitLabel& label) {
  const auto& orbit = orbit_members(label.letter);
  if (label.index < 0 || static_cast<std::size_t>(label.index) >= orbit.size())
    throw std::invalid_argument("form_by_label: no member " + label.to_string());
  return orbit[static_cast<std::size_t>(label.index)];
}

// U - x: the bitwise complement, a form in the same orbit as x.
inline Form complement(const Form& x) {
  return Form(static_cast<std::uint16_t>(~x.code()));
}

// 8*q[0] + 4*q[1] + 2*q[2] + q[3]; always magic with constant 30,
// normal only when the sixteen entries come out distinct.
inline Square compose(const std::array<Form, 4>& planes) {
  std::array<int, kCellCount> entries{};
  for (int i = 0; i < kCellCount; ++i) {
    int v = 0;
    for (int w = 0; w < 4; ++w) v |= ((planes[w].code() >> (15 - i)) & 1) << (3 - w);
    entries[i] = v;
  }
  return Square(entries);
}

struct Decomposition {
  std::array<Form, 4> planes;        // weights 8, 4, 2, 1
  std::array<OrbitLabel, 4> labels;  // per plane
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Splits a {0..15}-valued square into its four bit-planes (weight 8
// first). Rejects squares where some plane is not a form, since such a
// plane has no orbit label.
inline Decomposition decompose(const Square& a) {
  std::array<std::uint16_t, 4> codes{};
  for (int i = 0; i < kCellCount; ++i) {
    int v = a.entries()[i];
    if (v < 0 || v > 15)
      throw std::out_of_range("decompose: entry " + std::to_string(v) +
                              " is outside 0..15");
    for (int w = 0; w < 4; ++w)
      if ((v >> (3 - w)) & 1) codes[w] |= static_cast<std::uint16_t>(1u << (15 - i));
  }
  static constexpr int kWeights[4] = {8, 4, 2, 1};
  for (int w = 0; w < 4; ++w)
    if (!detail::is_form_code(codes[w]))
      throw std::invalid_argument(
          "decompose: square is not compatible (the weight-" +
          std::to_string(kWeights[w]) + " bit-plane is not a form)");
  Decomposition d{{Form(codes[0]), Form(codes[1]), Form(codes[2]), Form(codes[3])},
                  {}};
  for (int w = 0; w < 4; ++w) d.labels[w] = label_form(d.planes[w]);
  return d;
}

// Sorted multiset of four orbit letters; the membership class of a
// square's bit-plane decomposition. Renders as "(C,C,D,D)".
class ClassLabel {
 public:
  explicit ClassLabel(std::array<char, 4> letters) : letters_(letters) {
    std::sort(letters_.begin(), letters_.end());
    for (char ch : letters_)
      if (ch < 'A' || ch > 'E')
        throw std::invalid_argument("ClassLabel: orbit letters are A..E");
  }

  // Accepts "(A,C,D,E)" or the bare letters "ACDE".
  static ClassLabel parse(std::string_view text) {
    std::array<char, 4> letters{};
    int n = 0;
    for (char ch : text) {
      if (ch == '(' || ch == ')' || ch == ',' || ch == ' ') continue;
      if (n == 4) throw std::invalid_argument("ClassLabel: expected four letters");
      letters[n++] = ch;
    }
    if (n != 4) throw std::invalid_argument("ClassLabel: expected four letters");
    return ClassLabel(letters);
  }

  const std::array<char, 4>& letters() const { return letters_; }

  std::string to_string() const {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
      if (i) out.push_back(',');
      out.push_back(letters_[i]);
    }
    out.push_back(')');
    return out;
  }

  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;

 private:
  std::array<char, 4> letters_;
};

inline ClassLabel classify(const Square& a) {
  Decomposition d = decompose(a);
  return ClassLabel({d.labels[0].letter, d.labels[1].letter, d.labels[2].letter,
                     d.labels[3].letter});
}

// The seven classes whose compositions reach normal squares.
inline const std::array<ClassLabel, 7>& admissible_classes() {
  static const std::array<ClassLabel, 7> classes = {
      ClassLabel({'A', 'C', 'D', 'E'}), ClassLabel({'B', 'B', 'C', 'C'}),
      ClassLabel({'B', 'B', 'C', 'D'}), ClassLabel({'B', 'B', 'D', 'D'}),
      ClassLabel({'B', 'C', 'C', 'D'}), ClassLabel({'B', 'C', 'D', 'D'}),
      ClassLabel({'C', 'C', 'D', 'D'}),
  };
  return classes;
}

namespace detail {

// Normal compositions of all 16^4 ordered form quadruples. Distinct
// quadruples compose to distinct squares (the planes are recoverable),
// so deduplication must remove nothing; that is asserted.
inline const std::vector<Square>& form_generated_squares() {
  static const std::vector<Square> cache = [] {
    const auto& forms = enumerate_forms();
    std::vector<Square> out;
    std::size_t normal_quadruples = 0;
    for (const auto& q1 : forms)
      for (const auto& q2 : forms)
        for (const auto& q3 : forms)
          for (const auto& q4 : forms) {
            Square sq = compose({q1, q2, q3, q4});
            if (check_additive(sq).is_normal) {
              ++normal_quadruples;
              out.push_back(sq);
            }
          }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != normal_quadruples)
      throw internal_error("form quadruples composed to colliding squares");
    return out;
  }();
  return cache;
}

}  // namespace detail

// Every normal square reachable as 8*F1 + 4*F2 + 2*F3 + F4; sorted,
// distinct, and equal as a set to the compatibility-filtered enumeration.
inline std::vector<Square> generate_from_forms() {
  return detail::form_generated_squares();
}

// Census over all form-generated normal squares: exactly the seven
// admissible classes, counts summing to 4224.
inline std::map<ClassLabel, std::size_t> class_census() {
  static const std::map<ClassLabel, std::size_t> census = [] {
    std::map<ClassLabel, std::size_t> out;
    for (const auto& sq : detail::form_generated_squares()) ++out[classify(sq)];
    return out;
  }();
  return census;
}

// All normal squares of one class, sorted.
inline std::vector<Square> squares_in_class(const ClassLabel& label) {
  std::vector<Square> out;
  for (const auto& sq : detail::form_generated_squares())
    if (classify(sq) == label) out.push_back(sq);
  return out;
}

}  // namespace magic4

#endif  // MAGIC4_FORMS_HPP
