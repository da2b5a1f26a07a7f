#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "golden_squares.hpp"
#include "magic4/square.hpp"
#include "magic4/symmetry.hpp"

using namespace magic4;

TEST_CASE("apply_d8 basics") {
  CHECK(apply_d8(D8::identity, golden::es1_additive) == golden::es1_additive);
  CHECK(apply_d8(D8::rot90, golden::es1_additive) == golden::es1_rot90);
  CHECK(apply_d8(D8::rot180, apply_d8(D8::rot180, golden::es1_additive)) ==
        golden::es1_additive);
}

TEST_CASE("D8 is a group") {
  // composition table agrees with applying the transforms in sequence
  for (auto a : all_d8)
    for (auto b : all_d8) {
      Square lhs = apply_d8(d8_compose(a, b), golden::es1_additive);
      Square rhs = apply_d8(a, apply_d8(b, golden::es1_additive));
      CHECK(lhs == rhs);
    }

  for (auto g : all_d8) {
    CHECK(d8_compose(D8::identity, g) == g);
    CHECK(d8_compose(g, D8::identity) == g);
    CHECK(d8_compose(d8_inverse(g), g) == D8::identity);
    CHECK(d8_compose(g, d8_inverse(g)) == D8::identity);
  }

  // 8 distinct elements: the orbit of an asymmetric square has 8 members
  std::set<Square> images;
  for (auto g : all_d8) images.insert(apply_d8(g, golden::es1_additive));
  CHECK(images.size() == 8);
}

TEST_CASE("apply_d8 preserves the additive report") {
  auto before = check_additive(golden::es1_additive);
  for (auto g : all_d8) {
    auto after = check_additive(apply_d8(g, golden::es1_additive));
    CHECK(after == before);
  }
  // also on a non-magic square
  Square skew{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}};
  for (auto g : all_d8)
    CHECK(check_additive(apply_d8(g, skew)).is_magic == check_additive(skew).is_magic);
}

TEST_CASE("canonical_d8") {
  CHECK(canonical_d8(golden::es1_additive) == golden::es1_canonical);
  CHECK(canonical_d8(golden::es1_canonical) == golden::es1_canonical);  // idempotent
  for (auto g : all_d8)
    CHECK(canonical_d8(apply_d8(g, golden::es1_additive)) == golden::es1_canonical);
}

TEST_CASE("bit permutations") {
  BitPerm identity;
  CHECK(identity.is_identity());
  CHECK(apply_bitperm(identity, golden::es1_additive) == golden::es1_additive);

  // swap the outermost positions: 14 = 1110 -> 0111 = 7
  BitPerm swap_ends({3, 1, 2, 0});
  CHECK(swap_ends.apply_to_value(14) == 7);
  CHECK(swap_ends.apply_to_value(7) == 14);
  CHECK(swap_ends.apply_to_value(0) == 0);
  CHECK(swap_ends.apply_to_value(15) == 15);

  CHECK_THROWS_AS(swap_ends.apply_to_value(16), std::out_of_range);
  CHECK_THROWS_AS(BitPerm({0, 0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(BitPerm({0, 1, 2, 4}), std::invalid_argument);

  Square big{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16}};
  CHECK_THROWS_AS(apply_bitperm(swap_ends, big), std::out_of_range);
}

TEST_CASE("all_bit_perms has 24 distinct elements, identity first") {
  const auto& perms = all_bit_perms();
  REQUIRE(perms.size() == 24);
  CHECK(perms.front().is_identity());
  std::set<BitPerm> distinct(perms.begin(), perms.end());
  CHECK(distinct.size() == 24);
}

TEST_CASE("bit permutations act as a group") {
  const auto& perms = all_bit_perms();
  for (const auto& a : perms)
    for (const auto& b : perms) {
      Square lhs = apply_bitperm(bitperm_compose(a, b), golden::es1_additive);
      Square rhs = apply_bitperm(a, apply_bitperm(b, golden::es1_additive));
      CHECK(lhs == rhs);
    }
  for (const auto& p : perms)
    CHECK(bitperm_compose(bitperm_inverse(p), p).is_identity());
}

TEST_CASE("non-identity bit permutations move the worked examples") {
  for (const auto& p : all_bit_perms()) {
    if (p.is_identity()) continue;
    CHECK(apply_bitperm(p, golden::es1_additive) != golden::es1_additive);
    CHECK(apply_bitperm(p, golden::img2010) != golden::img2010);
  }
}

TEST_CASE("orbit sizes under the bit-permutation action") {
  CHECK(orbit_size_s4(golden::es1_additive) == 24);
  CHECK(orbit_size_s4(golden::img2010) == 24);
  // a constant square is fixed by everything
  CHECK(orbit_size_s4(Square{}) == 1);
}
