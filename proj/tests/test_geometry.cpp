#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/geometry.hpp"
#include "visgrab/rational.hpp"

using namespace visgrab;
using testing::pt;

TEST_CASE("rational literals parse exactly") {
  CHECK(Rational::parse("1.7") == Rational(17, 10));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("5/3") == Rational(5, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse(".25") == Rational(1, 4));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("3.") == Rational(3));
  CHECK(Rational::parse("0/9").sign() == 0);
  for (const char* bad : {"", "-", "1/0", "1/-2", "a", "1.2.3", "1e3", "/2", "."})
    CHECK_THROWS_AS(Rational::parse(bad), InvalidInput);
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}

TEST_CASE("rational prints canonically") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational::parse(Rational(22, 7).to_string()) == Rational(22, 7));
}

TEST_CASE("rational arithmetic crosses the inline limit and comes back") {
  Rational big(1);
  for (int i = 0; i < 100; ++i) big *= Rational(3);
  CHECK(big.to_string().size() == 48);
  Rational back = big;
  for (int i = 0; i < 100; ++i) back /= Rational(3);
  CHECK(back == Rational(1));
  CHECK(back.hash() == Rational(1).hash());
  CHECK(big > Rational(1L << 61));
  CHECK(-big < Rational(-(1L << 61)));
  CHECK((big - big).sign() == 0);
  CHECK(big + Rational(1) - big == Rational(1));
  const Rational x(4611686018427387903L, 4611686018427387902L);
  CHECK(x * x / x == x);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
}

TEST_CASE("rational matches GMP on random operations") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-(1L << 40), 1L << 40);
  for (int i = 0; i < 2000; ++i) {
    long an = d(rng), ad = d(rng) | 1, bn = d(rng), bd = d(rng) | 1;
    const Rational a(an, ad), b(bn, bd);
    mpq_class ga(an, ad), gb(bn, bd);
    ga.canonicalize();
    gb.canonicalize();
    auto same = [](const Rational& r, mpq_class g) {
      g.canonicalize();
      return r.value() == g && Rational(g) == r;
    };
    CHECK(same(a + b, ga + gb));
    CHECK(same(a - b, ga - gb));
    CHECK(same(a * b, ga * gb));
    if (b.sign() != 0) CHECK(same(a / b, ga / gb));
    CHECK(((a <=> b) < 0) == (ga < gb));
  }
}

TEST_CASE("orientation basics") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::kCounterClockwise);
  CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == Orientation::kClockwise);
  CHECK(orient(pt(0, 0), pt(1, 1), pt(5, 5)) == Orientation::kCollinear);
  CHECK(orient(pt(0, 1, 0, 1), pt(1, 3, 1, 3), pt(2, 3, 2, 3)) == Orientation::kCollinear);
}

TEST_CASE("property: orientation is antisymmetric and cyclic on random rational triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> n(-50, 50), d(1, 9);
  auto r = [&] { return pt(n(rng), d(rng), n(rng), d(rng)); };
  for (int i = 0; i < 1000; ++i) {
    const Point p = r(), q = r(), s = r();
    const int o = orient_sign(p, q, s);
    CHECK(orient_sign(q, p, s) == -o);
    CHECK(orient_sign(p, s, q) == -o);
    CHECK(orient_sign(q, s, p) == o);
    CHECK(orient_sign(s, p, q) == o);
  }
}

TEST_CASE("segments and triangles") {
  CHECK(strictly_between(pt(0, 0), pt(2, 2), pt(1, 1)));
  CHECK_FALSE(strictly_between(pt(0, 0), pt(2, 2), pt(2, 2)));
  CHECK_FALSE(strictly_between(pt(0, 0), pt(2, 2), pt(3, 3)));
  CHECK_FALSE(strictly_between(pt(0, 0), pt(2, 2), pt(1, 0)));
  CHECK(on_closed_segment(pt(0, 0), pt(2, 2), pt(2, 2)));
  CHECK(in_closed_triangle(pt(1, 0), pt(0, 0), pt(2, 0), pt(0, 2)));
  CHECK(in_closed_triangle(pt(1, 2, 1, 2), pt(0, 0), pt(2, 0), pt(0, 2)));
  CHECK_FALSE(in_closed_triangle(pt(2, 2), pt(0, 0), pt(2, 0), pt(0, 2)));
  CHECK(in_closed_triangle(pt(1, 1), pt(0, 0), pt(2, 2), pt(3, 3)));
  CHECK(midpoint(pt(0, 0), pt(1, 0)) == pt(1, 2, 0, 1));
}

TEST_CASE("line intersection") {
  auto x = line_intersection(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0));
  REQUIRE(x);
  CHECK(*x == pt(1, 1));
  x = line_intersection(pt(0, 0), pt(1, 3), pt(5, 0), pt(4, 1));
  REQUIRE(x);
  CHECK(orient(pt(0, 0), pt(1, 3), *x) == Orientation::kCollinear);
  CHECK(orient(pt(5, 0), pt(4, 1), *x) == Orientation::kCollinear);
  CHECK_FALSE(line_intersection(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
  CHECK_FALSE(line_intersection(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)));
}

TEST_CASE("convex hull of a square with collinear boundary points") {
  const std::vector<Point> pts{pt(1, 0), pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1), pt(2, 1)};
  CHECK(convex_hull(pts) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(point_in_convex_hull(pt(1, 1), pts, true));
  CHECK(point_in_convex_hull(pt(2, 1), pts, false));
  CHECK_FALSE(point_in_convex_hull(pt(2, 1), pts, true));
  CHECK_FALSE(point_in_convex_hull(pt(3, 1), pts, false));
  CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), InvalidInput);
  CHECK_THROWS_AS(convex_hull(std::vector<Point>{pt(0, 0), pt(0, 0)}), InvalidInput);
}

TEST_CASE("property: hull vertices are exactly the extreme points on a 5x5 grid") {
  std::vector<Point> grid;
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y) grid.push_back(pt(x, y));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> pts;
    for (const Point& p : grid)
      if (rng() % 3 == 0) pts.push_back(p);
    if (pts.empty()) continue;
    std::set<std::size_t> brute;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Point> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (others.empty() || !point_in_convex_hull(pts[i], others, false)) brute.insert(i);
    }
    const auto hull = convex_hull(pts);
    CHECK(std::set<std::size_t>(hull.begin(), hull.end()) == brute);
    if (hull.size() >= 3) {
      std::vector<Point> poly;
      for (auto i : hull) poly.push_back(pts[i]);
      CHECK(is_strictly_convex_ccw(poly));
    }
  }
}

TEST_CASE("strict convexity") {
  CHECK(is_strictly_convex_ccw(std::vector<Point>{pt(0, 0), pt(1, 0), pt(0, 1)}));
  CHECK_FALSE(is_strictly_convex_ccw(std::vector<Point>{pt(0, 0), pt(0, 1), pt(1, 0)}));
  CHECK_FALSE(is_strictly_convex_ccw(std::vector<Point>{pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)}));
  CHECK_FALSE(is_strictly_convex_ccw(std::vector<Point>{pt(0, 0), pt(2, 0), pt(1, 1), pt(2, 2), pt(0, 2)}));
}
