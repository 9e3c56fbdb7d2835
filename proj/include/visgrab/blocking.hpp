#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "visgrab/point_set.hpp"

namespace visgrab {

/// A unicolored point set whose mutual visibilities are to be blocked.
struct BlockTarget {
  std::vector<Point> vertices;
  int color = 0;

  /// Validates |U| >= 3 and distinct vertices.
  static BlockTarget make(std::vector<Point> vertices, int color);
  /// All vertices are corners of the hull and listed counterclockwise.
  bool is_convex() const;
  ColoredPointSet as_point_set() const;
};

enum class BlockingFailure { kOk, kOutsideHull, kMeetsTarget, kNotProper, kTooManyColors };
std::string_view to_string(BlockingFailure reason);

struct BlockingReport {
  bool valid = false;
  BlockingFailure reason = BlockingFailure::kOk;
  int colors_used_in_blockers = 0;
  /// Pairs of target vertices still mutually visible in U + B.
  std::vector<std::pair<std::size_t, std::size_t>> unblocked_pairs;
};

/// kStrict requires B inside the closed hull of U; kRelaxed drops that
/// condition (blockers outside the hull are allowed, as in arguments that
/// reason about points outside conv(U)).
enum class HullMode { kStrict, kRelaxed };

/// U followed by B, as one colored set (U's points first, in order).
ColoredPointSet combine(const BlockTarget& target, const ColoredPointSet& blockers);

/// True iff no point of X other than those of U, lying in the closed hull of
/// U, has U's color. Throws InvalidInput when U is not unicolored.
bool is_color_empty(std::span<const std::size_t> subset, const ColoredPointSet& set);

/// Checks B against U in order: placement (B meets U, B outside the hull),
/// proper coloring of U + B, then the color budget. Throws InvalidInput when
/// a blocker carries the target's color.
BlockingReport is_k_color_blocked(const BlockTarget& target, const ColoredPointSet& blockers,
                                  int k, HullMode mode = HullMode::kStrict);

struct TriangleClassification {
  /// 1..5, or empty when U + B matches none of the canonical instances.
  std::optional<int> instance;
  /// True when matched under full hull-membership equivalence; false when only
  /// the collinearity (blocking) structure matches.
  bool hull_equivalent = false;
  std::vector<std::size_t> bijection;
};

/// Requires a valid 3-color blocking of a triangle; throws InvalidInput otherwise.
TriangleClassification classify_triangle_blocking(const BlockTarget& triangle,
                                                  const ColoredPointSet& blockers);

/// A pair of same-colored side blockers of a triangle together with the
/// interior blocker separating them.
struct Beam {
  std::size_t first;
  std::size_t second;
  std::size_t blocker;
};
/// Indices refer to `blockers`.
std::vector<Beam> triangle_beams(const BlockTarget& triangle, const ColoredPointSet& blockers);

/// Lower bound on the size of any blocking set of a strictly convex hexagon
/// (vertices counterclockwise): six edge blockers plus four diagonal blockers
/// when the three long diagonals are concurrent, five otherwise.
int hexagon_blocker_lower_bound(std::span<const Point> hexagon);

struct SegmentCover {
  int count = 0;
  std::vector<Point> points;
};

/// Minimum number of points whose union meets every open segment
/// (points[a] points[b]). Exact: candidates are pairwise crossings plus one
/// free point per segment, and the hitting set is solved exhaustively.
SegmentCover min_segment_blockers(std::span<const Point> points,
                                  std::span<const std::pair<std::size_t, std::size_t>> segments);

/// min_segment_blockers over all diagonals of a strictly convex polygon.
SegmentCover min_diagonal_blockers(std::span<const Point> polygon);

}  // namespace visgrab
