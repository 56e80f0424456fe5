#include "dopt/params.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace dopt;

TEST_CASE("parameter set construction enforces the counting identity") {
  CHECK_NOTHROW(ParameterSet(7, {3, 1}, 1));
  CHECK_NOTHROW(ParameterSet(7, {3, 3}, 2));  // consistent, not D-optimal
  CHECK_THROWS_AS(ParameterSet(7, {3, 2}, 1), std::domain_error);
  CHECK_THROWS_AS(ParameterSet(0, {1}, 0), std::domain_error);
  CHECK_THROWS_AS(ParameterSet(7, {}, 0), std::domain_error);
  CHECK_THROWS_AS(ParameterSet(7, {8}, 8), std::domain_error);
  CHECK_THROWS_AS(ParameterSet(7, {3, 1}, -1), std::domain_error);
}

TEST_CASE("doptimal factory checks normalization") {
  auto p = ParameterSet::doptimal(15, 6, 4, 3);
  CHECK(p.v() == 15);
  CHECK(p.r() == 6);
  CHECK(p.s() == 4);
  CHECK(p.lambda() == 3);
  CHECK(p.n() == 7);
  CHECK(p.t() == 2);
  CHECK(p.is_doptimal());
  CHECK(p.to_string() == "(15;6,4;3)");

  CHECK_THROWS_AS(ParameterSet::doptimal(14, 6, 4, 3), std::domain_error);
  CHECK_THROWS_AS(ParameterSet::doptimal(15, 4, 6, 3), std::domain_error);
  CHECK_THROWS_AS(ParameterSet::doptimal(15, 8, 2, 3), std::domain_error);
  // consistent counts but v != 2n+1
  CHECK_THROWS_AS(ParameterSet::doptimal(7, 3, 3, 2), std::domain_error);
}

TEST_CASE("pair map oracle values") {
  CHECK(pair_to_params({1, 0}) == ParameterSet::doptimal(3, 1, 0, 0));
  CHECK(pair_to_params({1, 1}) == ParameterSet::doptimal(5, 1, 1, 0));
  CHECK(pair_to_params({2, 0}) == ParameterSet::doptimal(7, 3, 1, 1));
  CHECK(pair_to_params({2, 1}) == ParameterSet::doptimal(9, 3, 2, 1));
  CHECK(pair_to_params({7, 1}) == ParameterSet::doptimal(59, 28, 22, 21));
  CHECK(pair_to_params({6, 6}) == ParameterSet::doptimal(85, 36, 36, 30));
  CHECK(pair_to_params({8, 3}) == ParameterSet::doptimal(85, 39, 34, 31));
  CHECK_THROWS_AS(pair_to_params({0, 1}), std::domain_error);
  CHECK_THROWS_AS(pair_to_params({-1, -1}), std::domain_error);
}

TEST_CASE("pair map inverts exactly on its image") {
  for (int x = 0; x <= 30; ++x)
    for (int y = 0; y <= x; ++y) {
      auto p = pair_to_params({x, y});
      auto back = try_params_to_pair(p);
      REQUIRE(back.has_value());
      CHECK(back->x == x);
      CHECK(back->y == y);
    }
  // consistent two-block set that is no D-optimal parameter set
  ParameterSet off_image(7, {3, 3}, 2);
  CHECK(!try_params_to_pair(off_image).has_value());
  CHECK_THROWS_AS(params_to_pair(off_image), std::domain_error);
  CHECK(params_to_pair(ParameterSet::doptimal(13, 6, 3, 3)) == PairXY{3, 0});
}

TEST_CASE("enumeration up to 13 lists the six known sets") {
  auto sets = enumerate_params(13);
  REQUIRE(sets.size() == 6);
  CHECK(sets[0] == ParameterSet::doptimal(3, 1, 0, 0));
  CHECK(sets[1] == ParameterSet::doptimal(5, 1, 1, 0));
  CHECK(sets[2] == ParameterSet::doptimal(7, 3, 1, 1));
  CHECK(sets[3] == ParameterSet::doptimal(9, 3, 2, 1));
  CHECK(sets[4] == ParameterSet::doptimal(13, 4, 4, 2));
  CHECK(sets[5] == ParameterSet::doptimal(13, 6, 3, 3));
}

TEST_CASE("enumeration is sorted, duplicate-free and in-range") {
  auto sets = enumerate_params(199);
  std::set<ParameterSet> unique(sets.begin(), sets.end());
  CHECK(unique.size() == sets.size());
  for (size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);
  for (const auto& p : sets) {
    CHECK(p.v() <= 199);
    CHECK(p.v() >= 3);
    CHECK(p.is_doptimal());
  }
}

TEST_CASE("two-squares feasibility oracle values") {
  auto d59 = feasible_order(59);
  REQUIRE(d59.has_value());
  CHECK(d59->a == 9);
  CHECK(d59->b == 6);
  CHECK(d59->a * d59->a + d59->b * d59->b == 117);

  CHECK(!feasible_order(11).has_value());
  CHECK(is_feasible_order(85));
  CHECK(!is_feasible_order(95));
  CHECK_THROWS_AS(feasible_order(14), std::domain_error);
  CHECK_THROWS_AS(feasible_order(-3), std::domain_error);
}

TEST_CASE("every enumerated order is feasible") {
  for (const auto& p : enumerate_params(300)) {
    auto sq = feasible_order(p.v());
    REQUIRE(sq.has_value());
    CHECK(sq->a >= sq->b);
    CHECK(sq->b >= 0);
    CHECK(sq->a * sq->a + sq->b * sq->b == 2 * p.v() - 1);
  }
}

TEST_CASE("excluded orders below 100") {
  const std::vector<int> want{11, 17, 29, 35, 39, 47, 53,
                              65, 67, 71, 81, 83, 89, 95};
  CHECK(infeasible_orders(99) == want);
}
