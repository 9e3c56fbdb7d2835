#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "visgrab/blocking.hpp"
#include "visgrab/point_set.hpp"

namespace visgrab::io {

inline constexpr int kFormatVersion = 1;

/// Text format, one item per line, '#' starts a comment:
///   format 1         optional version line
///   k 4              optional declared color count
///   ell 3            optional collinearity limit
///   x y color [name] a point; x and y are "p", "p/q" or decimal literals
struct ConfigFile {
  ColoredPointSet set;
  std::optional<int> ell;
};

/// Throws ParseError carrying the offending line number.
ConfigFile parse(std::string_view text);
ConfigFile read_file(const std::string& path);

/// Canonical text; parse(serialize(f)) reproduces f exactly (point order,
/// colors, k, ell, names). Throws InvalidInput for names that cannot be
/// written (whitespace or '#').
std::string serialize(const ConfigFile& file);
std::string serialize(const ColoredPointSet& set);
void write_file(const std::string& path, const std::string& text);

nlohmann::ordered_json to_json(const Point& p);
nlohmann::ordered_json to_json(const ColoredPointSet& set);
nlohmann::ordered_json to_json(const BlockingReport& report);
/// Inverse of to_json(ColoredPointSet); throws InvalidInput on bad shape.
ColoredPointSet point_set_from_json(const nlohmann::ordered_json& j);

/// {"error": {"kind": ..., "message": ..., "line": ...}}; line omitted when 0.
nlohmann::ordered_json error_json(std::string_view kind, std::string_view message, int line = 0);

}  // namespace visgrab::io
