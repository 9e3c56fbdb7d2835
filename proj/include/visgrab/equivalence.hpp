#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "visgrab/point_set.hpp"

namespace visgrab {

/// Which convex-hull facts a bijection must preserve.
///
/// kHullMembership is the full relation: in the plane every membership
/// x0 in conv(S) is witnessed by a subset of S of size at most three, so
/// betweenness triples and closed in-triangle quadruples decide it.
/// kCollinearity keeps only the betweenness triples (the blocking structure).
enum class RelationLevel { kHullMembership, kCollinearity };

/// Exact relation tables of a point set, indexed by point.
class RelationTable {
 public:
  RelationTable(const ColoredPointSet& set, RelationLevel level);

  std::size_t size() const { return n_; }
  RelationLevel level() const { return level_; }
  /// i lies on the open segment (j k).
  bool between(std::size_t i, std::size_t j, std::size_t k) const {
    return mid_[(i * n_ + j) * n_ + k] != 0;
  }
  /// i lies in the closed convex hull of {j, k, l} and is none of them.
  bool in_triangle(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return tri_[((i * n_ + j) * n_ + k) * n_ + l] != 0;
  }

 private:
  std::size_t n_;
  RelationLevel level_;
  std::vector<std::uint8_t> mid_;
  std::vector<std::uint8_t> tri_;
};

struct CombinatorialSignature {
  std::size_t n = 0;
  /// (middle, end, end) with end indices ascending; list sorted.
  std::vector<std::array<std::size_t, 3>> betweenness;
  /// (inner, a, b, c) with a < b < c; list sorted. Empty at kCollinearity.
  std::vector<std::array<std::size_t, 4>> in_triangle;
  /// Color class sizes, descending.
  std::vector<std::size_t> class_sizes;
  /// Class id per point, numbered by first appearance (so colors may be renamed).
  std::vector<int> class_of;
  /// Relabeling-invariant label per point (iterated neighbourhood refinement).
  std::vector<std::uint64_t> point_labels;

  /// Relabeling-invariant summary. Equivalent sets always have equal forms.
  std::vector<std::uint64_t> canonical_form() const;
};

CombinatorialSignature signature(const ColoredPointSet& set,
                                 RelationLevel level = RelationLevel::kHullMembership);

/// A bijection phi (phi[i] is the index in `y` of x's point i) preserving the
/// chosen hull relations in both directions and the same-color relation.
/// Colors may be renamed. Complete search; intended for n up to about a dozen.
std::optional<std::vector<std::size_t>> are_equivalent(
    const ColoredPointSet& x, const ColoredPointSet& y,
    RelationLevel level = RelationLevel::kHullMembership);

}  // namespace visgrab
