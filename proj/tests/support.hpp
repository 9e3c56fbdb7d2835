#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "visgrab/blocking.hpp"
#include "visgrab/corpus.hpp"
#include "visgrab/geometry.hpp"
#include "visgrab/point_set.hpp"
#include "visgrab/visibility.hpp"

namespace testing {

using visgrab::Point;

inline Point pt(long x, long y) { return {visgrab::Rational(x), visgrab::Rational(y)}; }
inline Point pt(long xn, long xd, long yn, long yd) {
  return {visgrab::Rational(xn, xd), visgrab::Rational(yn, yd)};
}

inline bool general_position(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (visgrab::orient(pts[i], pts[j], pts[k]) == visgrab::Orientation::kCollinear) return false;
  return true;
}

// Distinct integer points in [-range, range]^2; general position when asked.
inline std::vector<Point> random_points(std::size_t n, std::mt19937_64& rng, long range,
                                        bool general) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p = pt(d(rng), d(rng));
    bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
    if (ok && general) {
      pts.push_back(p);
      ok = general_position(pts);
      pts.pop_back();
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

// Smallest k admitting a proper coloring, by trying every assignment.
inline int brute_chromatic(const visgrab::VisibilityGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u)
        for (std::size_t v = u + 1; v < n && ok; ++v) ok = !(g.adjacent(u, v) && c[u] == c[v]);
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

// Target (the leading points of the entry) and the remaining blockers.
inline std::pair<visgrab::BlockTarget, visgrab::ColoredPointSet> split_blocking(
    const visgrab::ColoredPointSet& s, std::size_t target_size) {
  std::vector<Point> u(s.points.begin(), s.points.begin() + static_cast<long>(target_size));
  visgrab::ColoredPointSet b;
  b.k = s.k;
  for (std::size_t i = target_size; i < s.size(); ++i) b.push_back(s.points[i], s.colors[i]);
  return {visgrab::BlockTarget::make(std::move(u), s.colors[0]), b};
}

inline std::pair<visgrab::BlockTarget, visgrab::ColoredPointSet> split_blocking(const std::string& id) {
  const auto& e = visgrab::corpus::entry(id);
  return split_blocking(e.set, e.expect.blocking->target_size);
}

}  // namespace testing
