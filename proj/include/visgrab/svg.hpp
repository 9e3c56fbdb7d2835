#pragma once

#include <string>

#include "visgrab/point_set.hpp"

namespace visgrab {

struct SvgStyle {
  int width = 600;
  double mark_radius = 5.0;
  /// Draw a segment for every same-colored pair (blocked in a proper set).
  bool blocked_pairs = false;
  bool labels = false;
};

/// Deterministic SVG 1.1 document. The viewport is the exact bounding box
/// padded by 5% on each side; y points up. Throws InvalidInput when empty.
std::string render_svg(const ColoredPointSet& set, const SvgStyle& style = {});

}  // namespace visgrab
