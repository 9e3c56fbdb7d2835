#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "visgrab/blocking.hpp"
#include "visgrab/search_space.hpp"

namespace visgrab {

enum class SearchMode { kExtremal, kBlocking };
std::string_view to_string(SearchMode mode);

struct SearchConfig {
  SearchMode mode = SearchMode::kExtremal;
  int k = 3;
  int ell = 3;
  GridSpec grid;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  /// Also offer intersections of lines through placed points and segment
  /// midpoints as positions. Off: lattice points only.
  bool intersections = true;
  /// Extremal: first point at the origin, second on the positive x-axis,
  /// first point off the axis above it.
  bool symmetry_breaking = true;
  /// Off: brute force over all subsets of the candidate positions (extremal,
  /// at most 20 positions). Used as an oracle for the pruned search.
  bool pruning = true;
  /// Blocking, convex target: cap |B| by the known values mc_3(1..4) = 1, 3,
  /// 6, 12 (B itself is properly k-colored with at most ell points on a line).
  bool known_bounds = true;
  /// Cap on the configuration size (extremal, default 16) or on |B|
  /// (blocking, default from known_bounds or 64 - |U|); 0 = default.
  std::size_t max_points = 0;
  /// Extremal: stop at the first configuration of this size; 0 = never.
  std::size_t target_size = 0;
  /// Replaces the lattice when nonempty.
  std::vector<Point> candidates;
  /// Extremal: start from these points (symmetry breaking is then skipped).
  std::optional<ColoredPointSet> seed_set;
  /// Worker cap for this call; 0 = worker_count().
  std::size_t threads = 0;
};

struct SearchReport {
  SearchMode mode = SearchMode::kExtremal;
  int k = 0;
  int ell = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  /// Blocking: the target, in its own color.
  std::optional<ColoredPointSet> target;
  /// Extremal: the whole configuration. Blocking: the blockers only.
  std::optional<ColoredPointSet> best;
  std::size_t best_size = 0;
  std::uint64_t nodes_expanded = 0;
  /// The discretized candidate space was fully explored.
  bool exhausted = false;
  std::size_t jobs = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

nlohmann::ordered_json to_json(const SearchReport& report);
/// Throws InvalidInput on malformed input.
SearchReport search_report_from_json(const nlohmann::ordered_json& j);

/// Largest properly k-colored configuration with at most ell collinear points
/// found within the budget. Results do not depend on the thread count.
SearchReport search_extremal(const SearchConfig& cfg);

/// First blocking of `target` with at most k colors found by the search.
SearchReport search_blocking(const BlockTarget& target, int k, const SearchConfig& cfg);

/// Re-checks the witness of a report with the independent verifiers. Returns
/// false when a check fails; throws VerificationFailed when the report is
/// structurally corrupt (size mismatch, duplicate points, bad color index).
bool replay(const SearchReport& report);

struct SamplerResult {
  std::uint64_t trials = 0;
  std::uint64_t completed = 0;  // rollouts that left no same-colored visible pair
  std::uint64_t valid = 0;      // is_k_color_blocked accepted the rollout
  std::optional<ColoredPointSet> first_valid;
};

/// Seeded random rollouts: repeatedly pick a same-colored visible pair and put
/// a blocker of a random admissible color at a random candidate position on
/// it (lattice, line intersections, midpoint), up to max_blockers points.
/// Every rollout's blockers are checked with is_k_color_blocked.
SamplerResult sample_blockings(const BlockTarget& target, int k, std::uint64_t trials,
                               std::size_t max_blockers, std::uint64_t seed, int resolution,
                               int ell = 3, std::size_t threads = 0);

}  // namespace visgrab
