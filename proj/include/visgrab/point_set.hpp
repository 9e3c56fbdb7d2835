#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "visgrab/geometry.hpp"

namespace visgrab {

/// Distinct planar points, each carrying a color index in [0, k).
///
/// `names` is either empty or parallel to `points`; it only matters for
/// corpus files and rendering.
struct ColoredPointSet {
  std::vector<Point> points;
  std::vector<int> colors;
  int k = 1;
  std::vector<std::string> names;

  /// Builds and validates. k defaults to (max color + 1) when 0 is passed.
  static ColoredPointSet make(std::vector<Point> points, std::vector<int> colors, int k = 0);
  static ColoredPointSet uncolored(std::vector<Point> points);

  /// Throws InvalidInput if any invariant is broken.
  void validate() const;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  void push_back(const Point& p, int color);
  /// Indices whose color is `color`, in order.
  std::vector<std::size_t> class_indices(int color) const;
  /// Number of distinct colors actually used.
  int colors_used() const;

  friend bool operator==(const ColoredPointSet&, const ColoredPointSet&) = default;
};

/// Concatenation; k becomes the max of both.
ColoredPointSet merge(const ColoredPointSet& a, const ColoredPointSet& b);

}  // namespace visgrab
