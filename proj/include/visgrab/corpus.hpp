#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "visgrab/point_set.hpp"

namespace visgrab::corpus {

/// The first `target_size` points of the entry form a unicolored target; the
/// rest should block it with at most k colors.
struct BlockingExpectation {
  std::size_t target_size = 0;
  int k = 0;
  bool valid = true;
};

struct Expectations {
  std::optional<bool> proper;
  std::optional<int> max_collinear;
  std::optional<int> chi;
  std::optional<BlockingExpectation> blocking;
};

struct Entry {
  std::string id;
  std::string provenance;
  ColoredPointSet set;
  /// Coordinates read off a drawing; kept for rendering only and never
  /// checked exactly.
  bool schematic = false;
  Expectations expect;
};

const std::vector<Entry>& all();
/// Throws InvalidInput for an unknown id.
const Entry& entry(const std::string& id);

/// Triangle (0,0), (3,0), (1,2) in color 0 followed by the blockers of the
/// numbered instance (1..5).
ColoredPointSet triangle_instance(int instance);

/// The six blockers of instance 5 on their own: the properly 3-colored
/// 6-point set with at most three points on a line.
ColoredPointSet pinwheel();

struct EntryCheck {
  std::string id;
  bool skipped = false;  // schematic
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

EntryCheck verify(const Entry& e);
std::vector<EntryCheck> verify_all();

}  // namespace visgrab::corpus
