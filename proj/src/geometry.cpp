#include "visgrab/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "visgrab/errors.hpp"

namespace visgrab {

int orient_sign(const Point& p, const Point& q, const Point& r) {
  const Rational lhs = (q.x - p.x) * (r.y - p.y);
  const Rational rhs = (q.y - p.y) * (r.x - p.x);
  const auto c = lhs <=> rhs;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
  const int s = orient_sign(p, q, r);
  if (s > 0) return Orientation::kCounterClockwise;
  if (s < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

namespace {

// For p already known to be collinear with a and b.
bool inside_open_range(const Point& a, const Point& b, const Point& p) {
  if (a.x != b.x) {
    const auto& lo = std::min(a.x, b.x);
    const auto& hi = std::max(a.x, b.x);
    return lo < p.x && p.x < hi;
  }
  const auto& lo = std::min(a.y, b.y);
  const auto& hi = std::max(a.y, b.y);
  return lo < p.y && p.y < hi;
}

}  // namespace

bool strictly_between(const Point& a, const Point& b, const Point& p) {
  if (a == b) throw InvalidInput("strictly_between: segment endpoints coincide");
  if (orient_sign(a, b, p) != 0) return false;
  return inside_open_range(a, b, p);
}

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
  if (p == a || p == b) return true;
  if (a == b) return false;
  return strictly_between(a, b, p);
}

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const int o = orient_sign(a, b, c);
  if (o == 0)
    return on_closed_segment(a, b, p) || on_closed_segment(b, c, p) || on_closed_segment(a, c, p);
  const int s1 = orient_sign(a, b, p);
  const int s2 = orient_sign(b, c, p);
  const int s3 = orient_sign(c, a, p);
  return s1 * o >= 0 && s2 * o >= 0 && s3 * o >= 0;
}

std::vector<std::size_t> convex_hull(std::span<const Point> points) {
  if (points.empty()) throw InvalidInput("convex_hull: empty point list");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (points[order[i]] == points[order[i - 1]])
      throw InvalidInput("convex_hull: duplicate point " + points[order[i]].to_string());
  if (order.size() == 1) return order;

  // Andrew's monotone chain; popping on non-left turns drops collinear points.
  std::vector<std::size_t> hull;
  hull.reserve(2 * order.size());
  for (std::size_t idx : order) {
    while (hull.size() >= 2 &&
           orient_sign(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <= 0)
      hull.pop_back();
    hull.push_back(idx);
  }
  const std::size_t lower = hull.size() + 1;
  for (std::size_t i = order.size() - 1; i-- > 0;) {
    const std::size_t idx = order[i];
    while (hull.size() >= lower &&
           orient_sign(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <= 0)
      hull.pop_back();
    hull.push_back(idx);
  }
  hull.pop_back();  // the start point closes the chain
  return hull;
}

bool point_in_convex_hull(const Point& p, std::span<const Point> hull_of, bool strict) {
  const std::size_t n = hull_of.size();
  if (strict) {
    std::vector<Point> distinct(hull_of.begin(), hull_of.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto hull = convex_hull(distinct);
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = distinct[hull[i]];
      const Point& b = distinct[hull[(i + 1) % hull.size()]];
      if (orient_sign(a, b, p) <= 0) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (hull_of[i] == p) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (on_closed_segment(hull_of[i], hull_of[j], p)) return true;
      for (std::size_t k = j + 1; k < n; ++k)
        if (in_closed_triangle(p, hull_of[i], hull_of[j], hull_of[k])) return true;
    }
  }
  return false;
}

std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c,
                                       const Point& d) {
  const Rational rx = b.x - a.x;
  const Rational ry = b.y - a.y;
  const Rational sx = d.x - c.x;
  const Rational sy = d.y - c.y;
  const Rational denom = rx * sy - ry * sx;
  if (denom.sign() == 0) return std::nullopt;
  const Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return Point{a.x + t * rx, a.y + t * ry};
}

Point midpoint(const Point& a, const Point& b) {
  return Point{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
}

bool is_strictly_convex_ccw(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (orient_sign(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) <= 0) return false;
  // Left turns everywhere also admit a pentagram-like winding; the vertex order
  // must match the hull's cyclic order.
  const auto hull = convex_hull(polygon);
  if (hull.size() != n) return false;
  const auto start = static_cast<std::size_t>(std::find(hull.begin(), hull.end(), 0) - hull.begin());
  for (std::size_t i = 0; i < n; ++i)
    if (hull[(start + i) % n] != i) return false;
  return true;
}

}  // namespace visgrab
