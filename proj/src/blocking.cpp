#include "visgrab/blocking.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "visgrab/coloring.hpp"
#include "visgrab/corpus.hpp"
#include "visgrab/equivalence.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/visibility.hpp"

namespace visgrab {

BlockTarget BlockTarget::make(std::vector<Point> vertices, int color) {
  if (vertices.size() < 3) throw InvalidInput("a block target needs at least three vertices");
  if (color < 0) throw InvalidInput("negative target color");
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("block target has duplicate vertices");
  return BlockTarget{std::move(vertices), color};
}

bool BlockTarget::is_convex() const { return is_strictly_convex_ccw(vertices); }

ColoredPointSet BlockTarget::as_point_set() const {
  return ColoredPointSet::make(vertices, std::vector<int>(vertices.size(), color), color + 1);
}

std::string_view to_string(BlockingFailure reason) {
  switch (reason) {
    case BlockingFailure::kOk: return "OK";
    case BlockingFailure::kOutsideHull: return "B_OUTSIDE_HULL";
    case BlockingFailure::kMeetsTarget: return "B_MEETS_U";
    case BlockingFailure::kNotProper: return "NOT_PROPER";
    case BlockingFailure::kTooManyColors: return "TOO_MANY_COLORS";
  }
  return "?";
}

ColoredPointSet combine(const BlockTarget& target, const ColoredPointSet& blockers) {
  ColoredPointSet out;
  out.points = target.vertices;
  out.colors.assign(target.vertices.size(), target.color);
  out.k = std::max(blockers.k, target.color + 1);
  for (std::size_t i = 0; i < blockers.size(); ++i) {
    out.points.push_back(blockers.points[i]);
    out.colors.push_back(blockers.colors[i]);
  }
  out.validate();
  return out;
}

bool is_color_empty(std::span<const std::size_t> subset, const ColoredPointSet& set) {
  if (subset.empty()) throw InvalidInput("is_color_empty: empty subset");
  const int color = set.colors.at(subset.front());
  std::vector<Point> hull_of;
  std::vector<bool> member(set.size(), false);
  for (std::size_t i : subset) {
    if (set.colors.at(i) != color) throw InvalidInput("is_color_empty: subset is not unicolored");
    hull_of.push_back(set.points[i]);
    member[i] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!member[i] && set.colors[i] == color &&
        point_in_convex_hull(set.points[i], hull_of, /*strict=*/false))
      return false;
  return true;
}

BlockingReport is_k_color_blocked(const BlockTarget& target, const ColoredPointSet& blockers,
                                  int k, HullMode mode) {
  for (int c : blockers.colors)
    if (c == target.color)
      throw InvalidInput("blocker color " + std::to_string(c) + " equals the target color");

  BlockingReport report;
  report.colors_used_in_blockers = blockers.colors_used();

  const auto& u = target.vertices;
  std::vector<Point> all = u;
  all.insert(all.end(), blockers.points.begin(), blockers.points.end());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      bool blocked = false;
      for (std::size_t w = 0; w < all.size() && !blocked; ++w)
        blocked = all[w] != u[i] && all[w] != u[j] && strictly_between(u[i], u[j], all[w]);
      if (!blocked) report.unblocked_pairs.emplace_back(i, j);
    }

  auto fail = [&](BlockingFailure reason) {
    report.valid = false;
    report.reason = reason;
    return report;
  };
  for (const Point& b : blockers.points) {
    if (std::find(u.begin(), u.end(), b) != u.end()) return fail(BlockingFailure::kMeetsTarget);
    if (mode == HullMode::kStrict && !point_in_convex_hull(b, u, /*strict=*/false))
      return fail(BlockingFailure::kOutsideHull);
  }
  if (!is_properly_colored(combine(target, blockers)).proper)
    return fail(BlockingFailure::kNotProper);
  if (report.colors_used_in_blockers > k) return fail(BlockingFailure::kTooManyColors);
  report.valid = true;
  report.reason = BlockingFailure::kOk;
  return report;
}

TriangleClassification classify_triangle_blocking(const BlockTarget& triangle,
                                                  const ColoredPointSet& blockers) {
  if (triangle.vertices.size() != 3 ||
      orient(triangle.vertices[0], triangle.vertices[1], triangle.vertices[2]) ==
          Orientation::kCollinear)
    throw InvalidInput("classify_triangle_blocking: target is not a triangle");
  if (!is_k_color_blocked(triangle, blockers, 3).valid)
    throw InvalidInput("classify_triangle_blocking: not a valid 3-color blocking");

  const ColoredPointSet whole = combine(triangle, blockers);
  TriangleClassification result;
  for (RelationLevel level : {RelationLevel::kHullMembership, RelationLevel::kCollinearity}) {
    for (int instance = 1; instance <= 5; ++instance) {
      const ColoredPointSet canonical = corpus::triangle_instance(instance);
      if (canonical.size() != whole.size()) continue;
      if (auto phi = are_equivalent(whole, canonical, level)) {
        result.instance = instance;
        result.hull_equivalent = level == RelationLevel::kHullMembership;
        result.bijection = std::move(*phi);
        return result;
      }
    }
  }
  return result;
}

std::vector<Beam> triangle_beams(const BlockTarget& triangle, const ColoredPointSet& blockers) {
  const auto& t = triangle.vertices;
  std::vector<bool> on_side(blockers.size(), false);
  for (std::size_t i = 0; i < blockers.size(); ++i)
    for (std::size_t s = 0; s < t.size(); ++s)
      if (strictly_between(t[s], t[(s + 1) % t.size()], blockers.points[i])) on_side[i] = true;

  std::vector<Beam> beams;
  for (std::size_t i = 0; i < blockers.size(); ++i)
    for (std::size_t j = i + 1; j < blockers.size(); ++j) {
      if (!on_side[i] || !on_side[j] || blockers.colors[i] != blockers.colors[j]) continue;
      for (std::size_t w : visgrab::blockers(blockers, i, j))
        if (point_in_convex_hull(blockers.points[w], t, /*strict=*/true)) {
          beams.push_back({i, j, w});
          break;
        }
    }
  return beams;
}

int hexagon_blocker_lower_bound(std::span<const Point> hexagon) {
  if (hexagon.size() != 6 || !is_strictly_convex_ccw(hexagon))
    throw InvalidInput("hexagon_blocker_lower_bound: expected a strictly convex CCW hexagon");
  // Long diagonals of a strictly convex hexagon always cross pairwise.
  const auto center = line_intersection(hexagon[0], hexagon[3], hexagon[1], hexagon[4]);
  const bool concurrent = center && orient(hexagon[2], hexagon[5], *center) == Orientation::kCollinear;
  return concurrent ? 10 : 11;
}

namespace {

struct Candidate {
  Point point;
  std::uint64_t covers = 0;
};

class HittingSet {
 public:
  HittingSet(std::vector<Candidate> candidates, std::size_t segments)
      : candidates_(std::move(candidates)),
        all_(segments == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << segments) - 1) {}

  std::vector<std::size_t> solve() {
    for (std::size_t limit = 0;; ++limit) {
      chosen_.clear();
      if (search(0, limit)) return chosen_;
    }
  }

 private:
  bool search(std::uint64_t covered, std::size_t limit) {
    if (covered == all_) return true;
    if (chosen_.size() == limit) return false;
    const int seg = std::countr_zero(~covered & all_);
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (!((candidates_[c].covers >> seg) & 1U)) continue;
      chosen_.push_back(c);
      if (search(covered | candidates_[c].covers, limit)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Candidate> candidates_;
  std::uint64_t all_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

SegmentCover min_segment_blockers(std::span<const Point> points,
                                  std::span<const std::pair<std::size_t, std::size_t>> segments) {
  if (segments.size() > 64) throw InvalidInput("min_segment_blockers: at most 64 segments");
  if (segments.empty()) return {};
  auto seg = [&](std::size_t s) -> std::pair<const Point&, const Point&> {
    return {points[segments[s].first], points[segments[s].second]};
  };

  std::set<Point> positions;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto [a, b] = seg(s);
    positions.insert(midpoint(a, b));
    for (std::size_t t = s + 1; t < segments.size(); ++t) {
      const auto [c, d] = seg(t);
      if (auto x = line_intersection(a, b, c, d)) {
        positions.insert(*x);
      } else if (orient(a, b, c) == Orientation::kCollinear) {
        // Overlapping collinear segments share an interval; its midpoint is a candidate.
        std::vector<Point> ends{a, b, c, d};
        std::sort(ends.begin(), ends.end());
        positions.insert(midpoint(ends[1], ends[2]));
      }
    }
  }

  std::vector<Candidate> candidates;
  for (const Point& p : positions) {
    Candidate c{p, 0};
    for (std::size_t s = 0; s < segments.size(); ++s) {
      const auto [a, b] = seg(s);
      if (strictly_between(a, b, p)) c.covers |= std::uint64_t{1} << s;
    }
    if (c.covers != 0) candidates.push_back(std::move(c));
  }
  // Wider coverage first keeps the exhaustive search shallow.
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
    return std::popcount(l.covers) > std::popcount(r.covers);
  });

  HittingSet solver(candidates, segments.size());
  SegmentCover cover;
  for (std::size_t c : solver.solve()) cover.points.push_back(candidates[c].point);
  cover.count = static_cast<int>(cover.points.size());
  return cover;
}

SegmentCover min_diagonal_blockers(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 4 || !is_strictly_convex_ccw(polygon))
    throw InvalidInput("min_diagonal_blockers: expected a strictly convex CCW polygon");
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) diagonals.emplace_back(i, j);
  return min_segment_blockers(polygon, diagonals);
}

}  // namespace visgrab
