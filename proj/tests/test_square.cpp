#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "golden_squares.hpp"
#include "magic4/square.hpp"

using namespace magic4;

TEST_CASE("lines are the 4 rows, 4 columns and 2 main diagonals") {
  const auto& all = lines();
  REQUIRE(all.size() == 10);

  // row 0 and the anti-diagonal, by definition
  CHECK(all[0].cells == std::array<Cell, 4>{{{0, 0}, {0, 1}, {0, 2}, {0, 3}}});
  CHECK(all[9].cells == std::array<Cell, 4>{{{0, 3}, {1, 2}, {2, 1}, {3, 0}}});
  CHECK(all[8].cells == std::array<Cell, 4>{{{0, 0}, {1, 1}, {2, 2}, {3, 3}}});

  for (const auto& line : all) {
    std::set<std::pair<int, int>> distinct;
    for (auto cell : line.cells) {
      REQUIRE(cell.row >= 0);
      REQUIRE(cell.row < 4);
      REQUIRE(cell.col >= 0);
      REQUIRE(cell.col < 4);
      distinct.insert({cell.row, cell.col});
    }
    CHECK(distinct.size() == 4);
  }

  // rows 0-3 then columns 0-3: each covered exactly once, fixed order
  for (int r = 0; r < 4; ++r)
    for (int j = 0; j < 4; ++j) CHECK(all[r].cells[j] == Cell{r, j});
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < 4; ++j) CHECK(all[4 + c].cells[j] == Cell{j, c});
}

TEST_CASE("line_name matches the fixed order") {
  CHECK(line_name(0) == "row 0");
  CHECK(line_name(3) == "row 3");
  CHECK(line_name(4) == "column 0");
  CHECK(line_name(7) == "column 3");
  CHECK(line_name(8) == "main diagonal");
  CHECK(line_name(9) == "anti-diagonal");
  CHECK_THROWS_AS(line_name(10), std::out_of_range);
}

TEST_CASE("line sums") {
  auto zeros = line_sums(Square{});
  CHECK(std::all_of(zeros.begin(), zeros.end(), [](auto s) { return s == 0; }));

  auto es1 = line_sums(golden::es1_additive);
  CHECK(std::all_of(es1.begin(), es1.end(), [](auto s) { return s == 30; }));

  auto img = line_sums(golden::img2010);
  CHECK(std::all_of(img.begin(), img.end(), [](auto s) { return s == 30; }));
}

TEST_CASE("additive magic constant") {
  CHECK(additive_magic_constant(4) == 30);
  CHECK(additive_magic_constant(1) == 0);
  CHECK(additive_magic_constant(3) == 12);
  CHECK_THROWS_AS(additive_magic_constant(0), std::domain_error);
  CHECK_THROWS_AS(additive_magic_constant(-2), std::domain_error);
}

TEST_CASE("check_additive") {
  auto es1 = check_additive(golden::es1_additive);
  CHECK(es1.is_magic);
  REQUIRE(es1.constant.has_value());
  CHECK(*es1.constant == 30);
  CHECK(es1.is_normal);

  auto zero = check_additive(Square{});
  CHECK(zero.is_magic);
  CHECK(*zero.constant == 0);
  CHECK_FALSE(zero.is_normal);

  // one perturbed entry breaks row 0 and column 0
  auto entries = golden::es1_additive.entries();
  entries[0] = 13;
  auto perturbed = check_additive(Square{entries});
  CHECK_FALSE(perturbed.is_magic);
  CHECK_FALSE(perturbed.constant.has_value());
  CHECK_FALSE(perturbed.is_normal);
}

TEST_CASE("check_additive is pure") {
  auto a = check_additive(golden::es1_additive);
  auto b = check_additive(golden::es1_additive);
  CHECK(a == b);
}

TEST_CASE("square construction rejects bad input") {
  std::array<int, 16> negative = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, -1};
  CHECK_THROWS_AS(Square(negative), std::invalid_argument);
  CHECK_THROWS_AS(Square::from_values({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Square::from_values(std::vector<int>(20, 0)), std::invalid_argument);
}

TEST_CASE("squares order lexicographically on row-major entries") {
  Square a{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}};
  Square b{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 14}};
  CHECK(a < b);
  CHECK(a == a);
  CHECK(a.at(3, 2) == 14);
}
