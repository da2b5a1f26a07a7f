#ifndef MAGIC4_VERIFY_HPP
#define MAGIC4_VERIFY_HPP

// The aggregate check suite behind `magic4 verify`: every headline count
// and structural claim, recomputed from scratch and compared against its
// expected value.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "magic4/correspond.hpp"
#include "magic4/enumerate.hpp"
#include "magic4/forms.hpp"
#include "magic4/square.hpp"
#include "magic4/symmetry.hpp"

namespace magic4 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

template <typename F>
void run_check(std::vector<CheckResult>& out, const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

}  // namespace detail

// Runs every check; all must pass on a correct build.
inline std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> results;

  detail::run_check(results, "order-3 semi-magic formula vs brute force", [](CheckResult& r) {
    r.passed = true;
    std::uint64_t last = 0;
    for (int line_sum = 0; line_sum <= 8; ++line_sum) {
      std::uint64_t formula = count_semimagic_order3(line_sum);
      std::uint64_t brute = brute_semimagic_order3(line_sum);
      if (formula != brute) r.passed = false;
      last = formula;
    }
    r.detail = "r=0..8 agree; r=8 gives " + std::to_string(last);
  });

  detail::run_check(results, "normal additive magic squares", [](CheckResult& r) {
    auto e = enumerate_normal_additive();
    r.passed = e.total == 7040 && e.squares.size() == 7040;
    r.detail = std::to_string(e.total) + " squares (expected 7040)";
  });

  detail::run_check(results, "D8 orbits of the enumeration", [](CheckResult& r) {
    auto e = enumerate_normal_additive();
    r.passed = e.d8_orbit_count == 880;
    r.detail = std::to_string(e.d8_orbit_count) + " orbits (expected 880)";
  });

  detail::run_check(results, "compatible squares", [](CheckResult& r) {
    auto census = count_compatible();
    r.passed = census.total == 4224 && census.d8_orbits == 528;
    r.detail = std::to_string(census.total) + " squares in " +
               std::to_string(census.d8_orbits) + " D8 orbits (expected 4224 / 528)";
  });

  detail::run_check(results, "S4 divisibility", [](CheckResult& r) {
    auto census = count_compatible();
    r.passed = census.total % 24 == 0;
    r.detail = std::to_string(census.total) + " / 24 = " + std::to_string(census.total / 24);
  });

  detail::run_check(results, "free S4 action", [](CheckResult& r) {
    r.passed = true;
    for (const auto& sq : detail::compatible_squares()) {
      for (const auto& p : all_bit_perms())
        if (!p.is_identity() && apply_bitperm(p, sq) == sq) r.passed = false;
      if (orbit_size_s4(sq) != 24) r.passed = false;
    }
    r.detail = "no non-identity bit permutation fixes any compatible square; all orbits have 24 elements";
  });

  detail::run_check(results, "form count", [](CheckResult& r) {
    auto forms = enumerate_forms();
    r.passed = forms.size() == 16;
    r.detail = std::to_string(forms.size()) + " forms (expected 16)";
  });

  detail::run_check(results, "form orbit sizes", [](CheckResult& r) {
    std::ostringstream detail;
    r.passed = true;
    const std::map<char, std::size_t> expected = {
        {'A', 2}, {'B', 4}, {'C', 4}, {'D', 4}, {'E', 2}};
    for (auto [letter, size] : expected) {
      std::size_t got = orbit_members(letter).size();
      if (got != size) r.passed = false;
      detail << letter << ":" << got << " ";
    }
    detail << "(expected A:2 B:4 C:4 D:4 E:2)";
    r.detail = detail.str();
  });

  detail::run_check(results, "complement pairs", [](CheckResult& r) {
    std::set<std::pair<std::uint16_t, std::uint16_t>> pairs;
    r.passed = true;
    for (const auto& f : enumerate_forms()) {
      Form c = complement(f);
      if (label_form(c).letter != label_form(f).letter) r.passed = false;
      pairs.insert({std::min(f.code(), c.code()), std::max(f.code(), c.code())});
    }
    r.passed = r.passed && pairs.size() == 8;
    r.detail = std::to_string(pairs.size()) +
               " unordered pairs summing to the all-ones matrix (expected 8)";
  });

  detail::run_check(results, "composition theorem", [](CheckResult& r) {
    r.passed = true;
    const auto& forms = enumerate_forms();
    for (const auto& q1 : forms)
      for (const auto& q2 : forms)
        for (const auto& q3 : forms)
          for (const auto& q4 : forms) {
            auto sums = line_sums(compose({q1, q2, q3, q4}));
            for (auto s : sums)
              if (s != 30) r.passed = false;
          }
    r.detail = "all 65536 ordered form quadruples compose to line sums 30";
  });

  detail::run_check(results, "oracle equivalence", [](CheckResult& r) {
    auto generated = generate_from_forms();
    const auto& filtered = detail::compatible_squares();
    r.passed = generated.size() == 4224 && filtered.size() == 4224 &&
               std::equal(generated.begin(), generated.end(), filtered.begin(),
                          filtered.end());
    r.detail = "form-generated set (" + std::to_string(generated.size()) +
               ") equals the compatibility-filtered enumeration (" +
               std::to_string(filtered.size()) + ")";
  });

  detail::run_check(results, "class census", [](CheckResult& r) {
    const std::map<std::string, std::size_t> expected = {
        {"(A,C,D,E)", 768}, {"(B,B,C,C)", 384}, {"(B,B,C,D)", 768},
        {"(B,B,D,D)", 384}, {"(B,C,C,D)", 768}, {"(B,C,D,D)", 768},
        {"(C,C,D,D)", 384}};
    auto census = class_census();
    r.passed = census.size() == expected.size();
    std::size_t total = 0;
    for (const auto& [label, count] : census) {
      auto it = expected.find(label.to_string());
      if (it == expected.end() || it->second != count) r.passed = false;
      total += count;
    }
    r.passed = r.passed && total == 4224;
    r.detail = "768 + 384 + 768 + 384 + 768 + 768 + 384 = " + std::to_string(total);
  });

  return results;
}

}  // namespace magic4

#endif  // MAGIC4_VERIFY_HPP
