#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "visgrab/point_set.hpp"

namespace visgrab {

/// Dense undirected simple graph on vertices 0..n-1, one bit row per vertex.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;
  explicit VisibilityGraph(std::size_t n);

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  /// Adds the edge {u, v}; self-loops are rejected with InvalidInput.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

VisibilityGraph visibility_graph(std::span<const Point> points);
VisibilityGraph visibility_graph(const ColoredPointSet& set);

/// Points strictly inside the open segment (points[u] points[v]), ordered from
/// u towards v. Throws InvalidInput if u == v.
std::vector<std::size_t> blockers(std::span<const Point> points, std::size_t u, std::size_t v);
std::vector<std::size_t> blockers(const ColoredPointSet& set, std::size_t u, std::size_t v);

/// Largest number of points on one line (1 for a single point).
int max_collinear(std::span<const Point> points);
int max_collinear(const ColoredPointSet& set);

}  // namespace visgrab
