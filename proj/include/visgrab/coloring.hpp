#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "visgrab/point_set.hpp"
#include "visgrab/visibility.hpp"

namespace visgrab {

struct ProperColoringReport {
  bool proper = true;
  /// Lexicographically first same-colored, mutually visible pair (i < j).
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

struct ChromaticResult {
  int chi = 0;
  std::vector<int> witness_coloring;  // colors 0..chi-1, every one used
  std::vector<std::size_t> clique;    // lower-bound certificate, |clique| <= chi
};

ProperColoringReport is_properly_colored(const ColoredPointSet& set);
ProperColoringReport is_properly_colored(const VisibilityGraph& graph, std::span<const int> colors);

/// Exact chromatic number. Deterministic: ties break by vertex index.
ChromaticResult chromatic_number(const VisibilityGraph& graph);

/// A proper coloring with colors in [0, k) if one exists.
std::optional<std::vector<int>> k_colorable(const VisibilityGraph& graph, int k);

/// A maximum clique when the graph has at most 64 vertices, otherwise a
/// greedily grown maximal clique. Vertices ascending.
std::vector<std::size_t> large_clique(const VisibilityGraph& graph);

}  // namespace visgrab
