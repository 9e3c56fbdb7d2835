#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "visgrab/point_set.hpp"

namespace visgrab {

/// Square lattice with step 1 / resolution covering [-extent, extent]^2.
struct GridSpec {
  int resolution = 1;
  int extent = 2;
};

std::vector<Point> grid_points(const GridSpec& grid);

/// Lattice points with step 1 / resolution inside the closed hull of `hull_of`,
/// excluding the points of `hull_of`.
std::vector<Point> grid_points_in_hull(std::span<const Point> hull_of, int resolution);

/// A growing colored point set that keeps every line through two of its
/// points, so collinearity limits and same-colored visible pairs ("debts")
/// are maintained incrementally. At most 64 points.
class Configuration {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  struct Line {
    std::uint64_t mask = 0;
    std::vector<std::uint8_t> members;  // in lexicographic point order, which is the order along the line
  };

  /// Where a prospective point would go.
  struct Probe {
    bool valid = false;  // not an existing point and no line would exceed ell
    std::vector<std::pair<std::uint32_t, std::uint32_t>> joins;  // (line, insert position)
    std::uint64_t covered = 0;  // existing points sharing a line with the probe
  };

  struct Debt {
    std::uint32_t u = 0, v = 0, line = 0;
  };

  explicit Configuration(int ell) : ell_(ell) {}

  std::size_t size() const { return points_.size(); }
  int ell() const { return ell_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<Line>& lines() const { return lines_; }
  int debt_count() const { return debts_; }
  bool contains(const Point& p) const;

  Probe probe(const Point& p) const;
  /// Change in the number of debts if the probed point were added with `color`.
  int debt_delta(const Probe& probe, int color) const;

  void push(const Point& p, int color, const Probe& probe);
  void push(const Point& p, int color);  // probes; throws InvalidInput when invalid
  void pop();

  /// The debt on the fullest line (first such in line order). `dead` is set
  /// when some debt lies on a line already holding ell points, since such a
  /// pair can never be blocked.
  struct DebtChoice {
    std::optional<Debt> debt;
    bool dead = false;
  };
  DebtChoice pick_debt() const;

  ColoredPointSet to_point_set(int k) const;

 private:
  struct Undo {
    std::size_t lines_before;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> joins;
    int debts_before;
  };

  int ell_;
  std::vector<Point> points_;
  std::vector<int> colors_;
  std::vector<Line> lines_;
  std::vector<Undo> undo_;
  int debts_ = 0;
};

}  // namespace visgrab
