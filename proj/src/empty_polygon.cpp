#include "visgrab/empty_polygon.hpp"

#include <algorithm>
#include <numeric>

#include "visgrab/coloring.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/visibility.hpp"

namespace visgrab {

namespace {

class OrientTable {
 public:
  explicit OrientTable(std::span<const Point> p) : n_(p.size()), sign_(n_ * n_ * n_, 0) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        for (std::size_t c = b + 1; c < n_; ++c) {
          const auto s = static_cast<signed char>(orient_sign(p[a], p[b], p[c]));
          set(a, b, c, s);
          set(b, c, a, s);
          set(c, a, b, s);
          set(a, c, b, -s);
          set(c, b, a, -s);
          set(b, a, c, -s);
        }
  }
  int operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return sign_[(a * n_ + b) * n_ + c];
  }

 private:
  void set(std::size_t a, std::size_t b, std::size_t c, signed char s) {
    sign_[(a * n_ + b) * n_ + c] = s;
  }
  std::size_t n_;
  std::vector<signed char> sign_;
};

void require_general_position(std::span<const Point> points, int k) {
  if (k < 3) throw InvalidInput("empty k-gon search needs k >= 3");
  if (k >= 4 && max_collinear(points) > 2)
    throw InvalidInput("empty k-gon search for k >= 4 needs points in general position");
}

}  // namespace

std::optional<EmptyKgonWitness> find_empty_convex_kgon(std::span<const Point> points, int k) {
  require_general_position(points, k);
  const std::size_t n = points.size();
  if (n < static_cast<std::size_t>(k)) return std::nullopt;
  const OrientTable orient3(points);

  auto above = [&](std::size_t p, std::size_t q) {
    return points[q].y > points[p].y || (points[q].y == points[p].y && points[q].x > points[p].x);
  };

  for (std::size_t p = 0; p < n; ++p) {
    // p is the bottom vertex; the rest of the polygon lies above it and is
    // visited in counterclockwise angular order around p.
    std::vector<std::size_t> q;
    for (std::size_t i = 0; i < n; ++i)
      if (i != p && above(p, i)) q.push_back(i);
    const std::size_t m = q.size();
    if (m + 1 < static_cast<std::size_t>(k)) continue;
    std::stable_sort(q.begin(), q.end(), [&](std::size_t a, std::size_t b) {
      return orient3(p, a, b) > 0;
    });

    auto fan_empty = [&](std::size_t a, std::size_t b) {
      for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == a || r == b) continue;
        if (orient3(p, a, r) >= 0 && orient3(a, b, r) >= 0 && orient3(b, p, r) >= 0) return false;
      }
      return true;
    };

    // chain[i][j]: vertex count of the longest empty convex chain p .. q[i] q[j].
    std::vector<std::vector<int>> chain(m, std::vector<int>(m, 0));
    std::vector<std::vector<int>> prev(m, std::vector<int>(m, -1));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (orient3(p, q[i], q[j]) <= 0 || !fan_empty(q[i], q[j])) continue;
        chain[i][j] = 3;
        for (std::size_t h = 0; h < i; ++h)
          if (chain[h][i] > 0 && orient3(q[h], q[i], q[j]) > 0 && chain[h][i] + 1 > chain[i][j]) {
            chain[i][j] = chain[h][i] + 1;
            prev[i][j] = static_cast<int>(h);
          }
        if (chain[i][j] < k) continue;

        std::vector<std::size_t> rev{q[j], q[i]};
        for (int a = static_cast<int>(i), b = static_cast<int>(j); prev[a][b] >= 0;) {
          const int h = prev[a][b];
          rev.push_back(q[h]);
          b = a;
          a = h;
        }
        // Keep p and the first k-1 chain vertices; sub-polygons of an empty
        // convex polygon stay empty.
        EmptyKgonWitness witness;
        witness.vertices.push_back(p);
        for (auto it = rev.rbegin(); it != rev.rend() && witness.vertices.size() < static_cast<std::size_t>(k); ++it)
          witness.vertices.push_back(*it);
        return witness;
      }
    }
  }
  return std::nullopt;
}

std::vector<EmptyKgonWitness> enumerate_empty_convex_kgons(std::span<const Point> points, int k) {
  require_general_position(points, k);
  const std::size_t n = points.size();
  std::vector<EmptyKgonWitness> out;
  if (n < static_cast<std::size_t>(k)) return out;

  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Point> sub;
    for (std::size_t i : pick) sub.push_back(points[i]);
    const auto hull = convex_hull(sub);
    if (hull.size() == static_cast<std::size_t>(k)) {
      bool empty = true;
      for (std::size_t r = 0; r < n && empty; ++r)
        if (std::find(pick.begin(), pick.end(), r) == pick.end())
          empty = !point_in_convex_hull(points[r], sub, /*strict=*/false);
      if (empty) {
        EmptyKgonWitness w;
        for (std::size_t h : hull) w.vertices.push_back(pick[h]);
        out.push_back(std::move(w));
      }
    }
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool verify_empty_kgon(std::span<const Point> points, const EmptyKgonWitness& witness) {
  const auto& v = witness.vertices;
  if (v.size() < 3) return false;
  std::vector<Point> poly;
  for (std::size_t i : v) {
    if (i >= points.size()) return false;
    poly.push_back(points[i]);
  }
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (orient(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()]) !=
        Orientation::kCounterClockwise)
      return false;
  for (std::size_t r = 0; r < points.size(); ++r)
    if (std::find(v.begin(), v.end(), r) == v.end() &&
        point_in_convex_hull(points[r], poly, /*strict=*/false))
      return false;
  return true;
}

std::optional<MonochromaticHexagon> mono_empty_hexagon(const ColoredPointSet& set) {
  if (!is_properly_colored(set).proper)
    throw InvalidInput("mono_empty_hexagon: the set is not properly colored");
  if (max_collinear(set) > 3)
    throw InvalidInput("mono_empty_hexagon: more than three collinear points");
  for (int color = 0; color < set.k; ++color) {
    const auto members = set.class_indices(color);
    if (members.size() < 6) continue;
    std::vector<Point> cls;
    for (std::size_t i : members) cls.push_back(set.points[i]);
    if (auto w = find_empty_convex_kgon(cls, 6)) {
      MonochromaticHexagon hex{color, {}};
      for (std::size_t i : w->vertices) hex.witness.vertices.push_back(members[i]);
      return hex;
    }
  }
  return std::nullopt;
}

std::vector<Point> horton_set(int n) {
  if (n < 1 || n > 64 || (n & (n - 1)) != 0)
    throw InvalidInput("horton_set: n must be a power of two in [1, 64]");
  std::vector<std::pair<std::int64_t, std::int64_t>> pts{{0, 0}};
  std::int64_t height = 0;  // max y minus min y of the current set
  for (int size = 1; size < n; size *= 2) {
    // Even x: a copy; odd x: a copy lifted high enough that every line through
    // two points of one copy passes strictly on the far side of the other copy.
    // Slopes inside a copy are at most height / 2 and x spans under 2 * size,
    // so a lift of (2 * size + 1) * height + 1 suffices.
    const std::int64_t lift = (2 * size + 1) * height + 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> next;
    for (auto [x, y] : pts) next.emplace_back(2 * x, y);
    for (auto [x, y] : pts) next.emplace_back(2 * x + 1, y + lift);
    pts = std::move(next);
    height = height + lift;
  }
  std::sort(pts.begin(), pts.end());
  std::vector<Point> out;
  for (auto [x, y] : pts) out.push_back(Point{Rational(x), Rational(y)});
  return out;
}

std::int64_t mc35_upper_bound(std::int64_t h6) {
  if (h6 < 1) throw InvalidInput("mc35_upper_bound: h6 must be positive");
  return 5 * h6 - 5;
}

std::int64_t largest_class_lower_bound(std::int64_t points, int colors) {
  if (colors < 1) throw InvalidInput("largest_class_lower_bound: colors must be positive");
  return (points + colors - 1) / colors;
}

}  // namespace visgrab
