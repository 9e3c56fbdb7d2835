#include "visgrab/point_set.hpp"

#include <algorithm>
#include <set>

#include "visgrab/errors.hpp"

namespace visgrab {

ColoredPointSet ColoredPointSet::make(std::vector<Point> points, std::vector<int> colors, int k) {
  ColoredPointSet set;
  set.points = std::move(points);
  set.colors = std::move(colors);
  if (k == 0) {
    k = 1;
    for (int c : set.colors) k = std::max(k, c + 1);
  }
  set.k = k;
  set.validate();
  return set;
}

ColoredPointSet ColoredPointSet::uncolored(std::vector<Point> points) {
  std::vector<int> colors(points.size(), 0);
  return make(std::move(points), std::move(colors), 1);
}

void ColoredPointSet::validate() const {
  if (k < 1) throw InvalidInput("color count k must be at least 1");
  if (colors.size() != points.size())
    throw InvalidInput("colors and points differ in length");
  if (!names.empty() && names.size() != points.size())
    throw InvalidInput("names and points differ in length");
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] < 0 || colors[i] >= k)
      throw InvalidInput("color index " + std::to_string(colors[i]) + " of point " +
                         std::to_string(i) + " is outside [0, " + std::to_string(k) + ")");
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw InvalidInput("duplicate point " + it->to_string());
}

void ColoredPointSet::push_back(const Point& p, int color) {
  points.push_back(p);
  colors.push_back(color);
  if (!names.empty()) names.emplace_back();
  k = std::max(k, color + 1);
}

std::vector<std::size_t> ColoredPointSet::class_indices(int color) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == color) out.push_back(i);
  return out;
}

int ColoredPointSet::colors_used() const {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

ColoredPointSet merge(const ColoredPointSet& a, const ColoredPointSet& b) {
  ColoredPointSet out = a;
  const bool keep_names = !a.names.empty() || !b.names.empty();
  if (keep_names && out.names.empty()) out.names.assign(a.size(), "");
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.points.push_back(b.points[i]);
    out.colors.push_back(b.colors[i]);
    if (keep_names) out.names.push_back(b.names.empty() ? "" : b.names[i]);
  }
  out.k = std::max(a.k, b.k);
  return out;
}

}  // namespace visgrab
