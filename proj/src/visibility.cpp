#include "visgrab/visibility.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "visgrab/errors.hpp"

namespace visgrab {

VisibilityGraph::VisibilityGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void VisibilityGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InvalidInput("self-loop in visibility graph");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void VisibilityGraph::remove_edge(std::size_t u, std::size_t v) {
  rows_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  rows_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t VisibilityGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[v * words_ + w]);
  return d;
}

std::size_t VisibilityGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> VisibilityGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> VisibilityGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

namespace {

// Ray from the origin in direction (dx, dy): the sign of the dominant axis plus
// the slope identify it; the distance along that axis orders points on it.
struct RayKey {
  int axis_sign;  // sign of dx (-1 or 1), or 3 + sign of dy (2 or 4) for vertical rays
  Rational slope;
  friend auto operator<=>(const RayKey&, const RayKey&) = default;
};

RayKey ray_key(const Point& from, const Point& to, Rational& distance) {
  const Rational dx = to.x - from.x;
  const Rational dy = to.y - from.y;
  if (dx.sign() != 0) {
    distance = dx.abs();
    return RayKey{dx.sign(), dy / dx};
  }
  distance = dy.abs();
  return RayKey{3 + dy.sign(), Rational(0)};
}

}  // namespace

VisibilityGraph visibility_graph(std::span<const Point> points) {
  const std::size_t n = points.size();
  VisibilityGraph graph(n);
  // Only the nearest point on each ray leaving u is visible from u.
  for (std::size_t u = 0; u < n; ++u) {
    std::map<RayKey, std::pair<Rational, std::size_t>> nearest;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      Rational distance;
      const RayKey key = ray_key(points[u], points[v], distance);
      auto [it, inserted] = nearest.try_emplace(key, distance, v);
      if (!inserted && distance < it->second.first) it->second = {distance, v};
    }
    // Visibility is symmetric; the pass from the smaller endpoint records it.
    for (const auto& [key, hit] : nearest)
      if (u < hit.second) graph.add_edge(u, hit.second);
  }
  return graph;
}

VisibilityGraph visibility_graph(const ColoredPointSet& set) { return visibility_graph(set.points); }

std::vector<std::size_t> blockers(std::span<const Point> points, std::size_t u, std::size_t v) {
  if (u == v) throw InvalidInput("blockers: u and v must differ");
  const Point& a = points[u];
  const Point& b = points[v];
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < points.size(); ++w)
    if (w != u && w != v && strictly_between(a, b, points[w])) out.push_back(w);
  const bool by_x = a.x != b.x;
  std::sort(out.begin(), out.end(), [&](std::size_t i, std::size_t j) {
    const Rational di = by_x ? (points[i].x - a.x).abs() : (points[i].y - a.y).abs();
    const Rational dj = by_x ? (points[j].x - a.x).abs() : (points[j].y - a.y).abs();
    return di < dj;
  });
  return out;
}

std::vector<std::size_t> blockers(const ColoredPointSet& set, std::size_t u, std::size_t v) {
  return blockers(set.points, u, v);
}

int max_collinear(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n <= 2) return static_cast<int>(n);
  int best = 2;
  for (std::size_t u = 0; u < n; ++u) {
    // Lines through u, keyed by direction up to sign.
    std::map<std::pair<bool, Rational>, int> through;
    for (std::size_t v = u + 1; v < n; ++v) {
      const Rational dx = points[v].x - points[u].x;
      const Rational dy = points[v].y - points[u].y;
      const auto key = dx.sign() == 0 ? std::make_pair(true, Rational(0))
                                      : std::make_pair(false, dy / dx);
      best = std::max(best, 1 + ++through[key]);
    }
  }
  return best;
}

int max_collinear(const ColoredPointSet& set) { return max_collinear(set.points); }

}  // namespace visgrab
