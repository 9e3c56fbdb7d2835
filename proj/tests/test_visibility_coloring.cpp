#include <doctest.h>

#include <random>

#include "support.hpp"
#include "visgrab/coloring.hpp"
#include "visgrab/corpus.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/visibility.hpp"

using namespace visgrab;
using testing::pt;

TEST_CASE("visibility on a line is a path") {
  const std::vector<Point> pts{pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)};
  const auto g = visibility_graph(pts);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 1));
  CHECK(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(blockers(pts, 0, 3) == std::vector<std::size_t>{2, 1});
  CHECK(blockers(pts, 3, 0) == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(blockers(pts, 1, 1), InvalidInput);
  CHECK(max_collinear(pts) == 4);
  CHECK(max_collinear(std::vector<Point>{pt(5, 5)}) == 1);
}

TEST_CASE("graph edits") {
  VisibilityGraph g(70);
  g.add_edge(3, 68);
  CHECK(g.adjacent(68, 3));
  CHECK(g.degree(3) == 1);
  CHECK(g.neighbors(68) == std::vector<std::size_t>{3});
  g.remove_edge(3, 68);
  CHECK(g.edge_count() == 0);
  CHECK_THROWS_AS(g.add_edge(4, 4), InvalidInput);
}

TEST_CASE("property: visibility and max_collinear agree with direct definitions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = testing::random_points(3 + trial % 9, rng, 2, false);
    const auto g = visibility_graph(pts);
    int best = 1;
    for (std::size_t u = 0; u < pts.size(); ++u)
      for (std::size_t v = u + 1; v < pts.size(); ++v) {
        bool seen = true;
        int on_line = 2;
        for (std::size_t w = 0; w < pts.size(); ++w) {
          if (w == u || w == v) continue;
          if (strictly_between(pts[u], pts[v], pts[w])) seen = false;
          if (orient(pts[u], pts[v], pts[w]) == Orientation::kCollinear) ++on_line;
        }
        CHECK(g.adjacent(u, v) == seen);
        best = std::max(best, on_line);
      }
    CHECK(max_collinear(pts) == best);
  }
}

TEST_CASE("proper coloring report") {
  auto s = ColoredPointSet::make({pt(0, 0), pt(1, 0), pt(2, 0)}, {0, 1, 0});
  CHECK(is_properly_colored(s).proper);
  s.colors = {0, 0, 1};
  const auto r = is_properly_colored(s);
  CHECK_FALSE(r.proper);
  REQUIRE(r.violation);
  CHECK(*r.violation == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("chromatic number of the 12-point configuration is 4") {
  const auto& s = corpus::entry("twelve-integer").set;
  const auto g = visibility_graph(s);
  const auto r = chromatic_number(g);
  CHECK(r.chi == 4);
  CHECK(is_properly_colored(g, r.witness_coloring).proper);
  CHECK_FALSE(k_colorable(g, 3));
  CHECK(k_colorable(g, 4));
}

TEST_CASE("property: exact chromatic number matches brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto pts = testing::random_points(n, rng, 2, false);
    const auto g = visibility_graph(pts);
    const auto r = chromatic_number(g);
    CHECK(r.chi == testing::brute_chromatic(g));
    REQUIRE(r.witness_coloring.size() == n);
    CHECK(is_properly_colored(g, r.witness_coloring).proper);
    CHECK(*std::max_element(r.witness_coloring.begin(), r.witness_coloring.end()) == r.chi - 1);
    CHECK(r.clique.size() <= static_cast<std::size_t>(r.chi));
    for (std::size_t a = 0; a < r.clique.size(); ++a)
      for (std::size_t b = a + 1; b < r.clique.size(); ++b) CHECK(g.adjacent(r.clique[a], r.clique[b]));
    if (r.chi > 1) CHECK_FALSE(k_colorable(g, r.chi - 1));
  }
}

TEST_CASE("property: chromatic number never drops when edges are added") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    VisibilityGraph g(9);
    g.add_edge(0, 1);
    int prev = chromatic_number(g).chi;
    for (int e = 0; e < 20; ++e) {
      const std::size_t u = rng() % 9, v = rng() % 9;
      if (u == v) continue;
      g.add_edge(u, v);
      const int chi = chromatic_number(g).chi;
      CHECK(chi >= prev);
      prev = chi;
    }
  }
}

TEST_CASE("complete graphs and the empty graph") {
  CHECK_THROWS_AS(chromatic_number(VisibilityGraph(0)), InvalidInput);
  CHECK(chromatic_number(VisibilityGraph(5)).chi == 1);
  VisibilityGraph k7(7);
  for (std::size_t u = 0; u < 7; ++u)
    for (std::size_t v = u + 1; v < 7; ++v) k7.add_edge(u, v);
  CHECK(chromatic_number(k7).chi == 7);
  CHECK(large_clique(k7).size() == 7);
}
