#include <random>

#include "doctest.h"
#include "emptygon/generators.hpp"
#include "emptygon/oracle.hpp"
#include "support.hpp"

using namespace emptygon;
using namespace emptygon::oracle;
using testing::grid_points;
using testing::square_plus_center;

TEST_CASE("oracle_k_hole") {
  CHECK_FALSE(oracle_k_hole(square_plus_center(), 4).has_value());
  const PointSet sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  const auto h = oracle_k_hole(sq, 4);
  REQUIRE(h.has_value());
  CHECK(PointSet(h->vertices()) == sq);
  const auto p = generators::random_general_position(10, 1);
  CHECK(oracle_k_hole(p, 5).has_value());
}

TEST_CASE("oracle_max_convex_subset") {
  std::vector<Point> line;
  for (int i = 0; i < 10; ++i) line.push_back({i, 0});
  const PointSet l(line);
  CHECK(oracle_max_convex_subset(l, true) == 2);
  CHECK(oracle_max_convex_subset(l, false) == 10);

  OracleBudget budget;
  budget.convex_subsets = 20;
  CHECK(oracle_max_convex_subset(generators::every_second_side(9, 6), true, budget) == 8);
}

TEST_CASE("oracle_k_minimality") {
  const PointSet pent{{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}};
  CHECK(oracle_k_minimality(pent, pent.points(), 5));
  CHECK_FALSE(oracle_k_minimality(square_plus_center(), std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}, 3));
}

TEST_CASE("budgets are refused, not truncated") {
  CHECK_THROWS_AS(oracle_k_hole(grid_points(6), 5), BudgetExceeded);
  CHECK_THROWS_AS(oracle_k_hole(grid_points(5), 6), BudgetExceeded);
  CHECK_THROWS_AS(oracle_max_convex_subset(grid_points(4), true), BudgetExceeded);
  CHECK_THROWS_AS(oracle_k_minimality(grid_points(4), grid_points(4).points(), 5), BudgetExceeded);
  OracleBudget tiny;
  tiny.time_limit_seconds = 1e-9;
  tiny.holes_6_7 = 100;
  CHECK_THROWS_AS(oracle_k_hole(generators::horton(64), 7, tiny), BudgetExceeded);
}

TEST_CASE("oracles are mutually consistent") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto p = generators::random_in_box(9, 6, rng());
    const auto strict = oracle_max_convex_subset(p, true);
    for (std::size_t k = 3; k <= 6; ++k)
      if (oracle_k_hole(p, k)) CHECK(strict >= k);
    CHECK(oracle_max_collinear(p) == testing::brute_max_collinear(p.vector()));
  }
}
