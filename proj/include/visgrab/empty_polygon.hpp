#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "visgrab/point_set.hpp"

namespace visgrab {

/// k vertices (indices into the host set, counterclockwise) in convex
/// position with no other host point in their closed hull.
struct EmptyKgonWitness {
  std::vector<std::size_t> vertices;
  friend bool operator==(const EmptyKgonWitness&, const EmptyKgonWitness&) = default;
};

/// First empty convex k-gon found by the edge-extension dynamic program
/// (bottom vertex in index order, then angular order around it). For k >= 4
/// the set must be in general position; k must be at least 3.
std::optional<EmptyKgonWitness> find_empty_convex_kgon(std::span<const Point> points, int k);

/// Every empty convex k-gon by brute force over k-subsets, in lexicographic
/// subset order. Meant as an oracle for small inputs.
std::vector<EmptyKgonWitness> enumerate_empty_convex_kgons(std::span<const Point> points, int k);

/// Checks convexity with orient on consecutive triples and emptiness with
/// point_in_convex_hull over all other points.
bool verify_empty_kgon(std::span<const Point> points, const EmptyKgonWitness& witness);

struct MonochromaticHexagon {
  int color = 0;
  EmptyKgonWitness witness;  // indices into the colored set
};

/// Searches each color class, in color order, for an empty convex hexagon
/// whose hull holds no other point of that class. Requires a proper coloring
/// with at most three points on a line.
std::optional<MonochromaticHexagon> mono_empty_hexagon(const ColoredPointSet& set);

/// The recursive Horton construction on integer coordinates; n in {1, 2, 4, ..., 64}.
std::vector<Point> horton_set(int n);

/// 5 * h6 - 5: the size bound for properly 5-colored sets with at most three
/// collinear points, given that every h6-point set in general position holds
/// an empty convex hexagon.
std::int64_t mc35_upper_bound(std::int64_t h6);

/// Pigeonhole: some class of a `colors`-colored set of `points` points has at
/// least ceil(points / colors) members.
std::int64_t largest_class_lower_bound(std::int64_t points, int colors);

}  // namespace visgrab
