#include <doctest.h>

#include <random>

#include "support.hpp"
#include "visgrab/empty_polygon.hpp"
#include "visgrab/errors.hpp"

using namespace visgrab;
using testing::pt;

TEST_CASE("bound arithmetic") {
  CHECK(mc35_upper_bound(463) == 2310);
  CHECK(mc35_upper_bound(1) == 0);
  CHECK_THROWS_AS(mc35_upper_bound(0), InvalidInput);
  CHECK(largest_class_lower_bound(2311, 5) == 463);
  CHECK(largest_class_lower_bound(2310, 5) == 462);
  CHECK(largest_class_lower_bound(0, 5) == 0);
  CHECK_THROWS_AS(largest_class_lower_bound(10, 0), InvalidInput);
}

TEST_CASE("a convex pentagon with an inner point") {
  const std::vector<Point> pts{pt(0, 0), pt(4, 0), pt(5, 3), pt(2, 5), pt(-1, 3), pt(2, 2)};
  CHECK_FALSE(find_empty_convex_kgon(pts, 5));
  const auto quad = find_empty_convex_kgon(pts, 4);
  REQUIRE(quad);
  CHECK(verify_empty_kgon(pts, *quad));
  CHECK(enumerate_empty_convex_kgons(pts, 5).empty());
  CHECK_FALSE(verify_empty_kgon(pts, EmptyKgonWitness{{0, 1, 2, 3, 4}}));
  CHECK_THROWS_AS(find_empty_convex_kgon(pts, 2), InvalidInput);
}

TEST_CASE("collinear input is rejected for k >= 4") {
  const std::vector<Point> pts{pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)};
  CHECK_THROWS_AS(find_empty_convex_kgon(pts, 4), InvalidInput);
  CHECK(find_empty_convex_kgon(pts, 3));
}

TEST_CASE("property: dynamic program agrees with exhaustive enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const auto pts = testing::random_points(5 + trial % 10, rng, 12, true);
    for (int k = 3; k <= 6; ++k) {
      CAPTURE(k);
      const auto w = find_empty_convex_kgon(pts, k);
      const auto all = enumerate_empty_convex_kgons(pts, k);
      CHECK(w.has_value() == !all.empty());
      if (w) CHECK(verify_empty_kgon(pts, *w));
      for (const auto& e : all) CHECK(verify_empty_kgon(pts, e));
    }
  }
}

TEST_CASE("property: five points in general position span an empty convex quadrilateral") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto pts = testing::random_points(5, rng, 20, true);
    const auto w = find_empty_convex_kgon(pts, 4);
    REQUIRE(w);
    CHECK(verify_empty_kgon(pts, *w));
  }
}

TEST_CASE("Horton sets") {
  const auto h8 = horton_set(8);
  CHECK(h8.size() == 8);
  CHECK(testing::general_position(h8));
  const auto h16 = horton_set(16);
  CHECK(testing::general_position(h16));
  CHECK(std::is_sorted(h16.begin(), h16.end()));
  CHECK(find_empty_convex_kgon(h16, 6));
  CHECK_THROWS_AS(horton_set(12), InvalidInput);
  CHECK_THROWS_AS(horton_set(128), InvalidInput);
}

TEST_CASE("monochromatic empty hexagons") {
  std::vector<Point> hex{pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0), pt(-1, -2), pt(1, -3)};
  auto s = ColoredPointSet::make(hex, std::vector<int>(6, 0));
  // All six see each other around the boundary, so the set is not proper.
  CHECK_THROWS_AS(mono_empty_hexagon(s), InvalidInput);
}
