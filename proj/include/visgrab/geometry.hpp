#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "visgrab/rational.hpp"

namespace visgrab {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

/// Sign of the cross product (q - p) x (r - p).
Orientation orient(const Point& p, const Point& q, const Point& r);
int orient_sign(const Point& p, const Point& q, const Point& r);

/// True iff p lies on the open segment (a b). Throws InvalidInput if a == b.
bool strictly_between(const Point& a, const Point& b, const Point& p);

/// Closed segment [a b]; a == b is allowed and degenerates to p == a.
bool on_closed_segment(const Point& a, const Point& b, const Point& p);

/// Closed triangle membership; degenerate (collinear) triangles are handled as
/// the union of their three closed sides.
bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// Hull vertices, counterclockwise, starting at the lexicographically smallest
/// point. Collinear boundary points that are not corners are omitted.
/// Throws InvalidInput on empty input or duplicate points.
std::vector<std::size_t> convex_hull(std::span<const Point> points);

/// Membership of p in conv(S). Closed membership is decided by Caratheodory
/// reduction (a point of S, a closed segment, or a closed triangle); strict
/// membership tests the topological interior, which is empty for degenerate S.
bool point_in_convex_hull(const Point& p, std::span<const Point> hull_of, bool strict);

/// Intersection of the lines ab and cd, if they are not parallel.
std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c,
                                       const Point& d);

Point midpoint(const Point& a, const Point& b);

/// True iff the polygon, taken in the given order, is strictly convex and
/// counterclockwise (every consecutive triple turns left).
bool is_strictly_convex_ccw(std::span<const Point> polygon);

}  // namespace visgrab
