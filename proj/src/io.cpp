#include "visgrab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "visgrab/errors.hpp"

namespace visgrab::io {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& text, int line, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw ParseError(std::string("malformed ") + what + " '" + text + "'", line);
  return value;
}

Rational parse_coordinate(const std::string& text, int line) {
  try {
    return Rational::parse(text);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

ConfigFile parse(std::string_view text) {
  ConfigFile file;
  std::optional<int> declared_k;
  std::map<Point, int> seen;
  std::vector<int> point_line;
  bool any_name = false;
  std::vector<std::string> names;

  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto t = tokens(line);
    if (t.empty()) continue;

    if (t[0] == "format" || t[0] == "k" || t[0] == "ell") {
      if (t.size() != 2) throw ParseError("directive '" + t[0] + "' takes one value", line_no);
      const int v = parse_int(t[1], line_no, t[0].c_str());
      if (t[0] == "format") {
        if (v != kFormatVersion)
          throw ParseError("unsupported format version " + t[1], line_no);
      } else if (t[0] == "k") {
        if (v < 1) throw ParseError("k must be at least 1", line_no);
        declared_k = v;
      } else {
        if (v < 2) throw ParseError("ell must be at least 2", line_no);
        file.ell = v;
      }
      continue;
    }

    if (t.size() < 3 || t.size() > 4)
      throw ParseError("expected 'x y color [name]'", line_no);
    Point p{parse_coordinate(t[0], line_no), parse_coordinate(t[1], line_no)};
    const int color = parse_int(t[2], line_no, "color index");
    if (color < 0) throw ParseError("negative color index", line_no);
    if (auto [it, fresh] = seen.emplace(p, line_no); !fresh)
      throw ParseError("duplicate point " + p.to_string() + " (first on line " +
                           std::to_string(it->second) + ")",
                       line_no);
    file.set.points.push_back(std::move(p));
    file.set.colors.push_back(color);
    point_line.push_back(line_no);
    names.push_back(t.size() == 4 ? t[3] : "");
    any_name = any_name || t.size() == 4;
  }

  if (file.set.points.empty()) throw ParseError("no points", 0);
  int k = 1;
  for (int c : file.set.colors) k = std::max(k, c + 1);
  if (declared_k) {
    for (std::size_t i = 0; i < file.set.colors.size(); ++i)
      if (file.set.colors[i] >= *declared_k)
        throw ParseError("color index " + std::to_string(file.set.colors[i]) +
                             " is outside [0, " + std::to_string(*declared_k) + ")",
                         point_line[i]);
    k = *declared_k;
  }
  file.set.k = k;
  if (any_name) file.set.names = std::move(names);
  return file;
}

ConfigFile read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string serialize(const ConfigFile& file) {
  const auto& s = file.set;
  s.validate();
  std::string out = "format " + std::to_string(kFormatVersion) + "\n";
  out += "k " + std::to_string(s.k) + "\n";
  if (file.ell) out += "ell " + std::to_string(*file.ell) + "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s.points[i].x.to_string() + " " + s.points[i].y.to_string() + " " +
           std::to_string(s.colors[i]);
    if (!s.names.empty() && !s.names[i].empty()) {
      for (char c : s.names[i])
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
          throw InvalidInput("point name '" + s.names[i] + "' cannot be serialized");
      out += " " + s.names[i];
    }
    out += "\n";
  }
  return out;
}

std::string serialize(const ColoredPointSet& set) { return serialize(ConfigFile{set, std::nullopt}); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

nlohmann::ordered_json to_json(const Point& p) {
  return nlohmann::ordered_json::array({p.x.to_string(), p.y.to_string()});
}

nlohmann::ordered_json to_json(const ColoredPointSet& set) {
  nlohmann::ordered_json j;
  j["k"] = set.k;
  auto pts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    nlohmann::ordered_json p;
    p["x"] = set.points[i].x.to_string();
    p["y"] = set.points[i].y.to_string();
    p["color"] = set.colors[i];
    if (!set.names.empty() && !set.names[i].empty()) p["name"] = set.names[i];
    pts.push_back(std::move(p));
  }
  j["points"] = std::move(pts);
  return j;
}

ColoredPointSet point_set_from_json(const nlohmann::ordered_json& j) {
  try {
    ColoredPointSet s;
    s.k = j.at("k").get<int>();
    bool any_name = false;
    std::vector<std::string> names;
    for (const auto& p : j.at("points")) {
      s.points.push_back(Point{Rational::parse(p.at("x").get<std::string>()),
                               Rational::parse(p.at("y").get<std::string>())});
      s.colors.push_back(p.at("color").get<int>());
      names.push_back(p.contains("name") ? p["name"].get<std::string>() : "");
      any_name = any_name || p.contains("name");
    }
    if (any_name) s.names = std::move(names);
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed point set JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const BlockingReport& report) {
  nlohmann::ordered_json j;
  j["valid"] = report.valid;
  j["reason"] = std::string(to_string(report.reason));
  j["colors_used_in_blockers"] = report.colors_used_in_blockers;
  auto pairs = nlohmann::ordered_json::array();
  for (auto [a, b] : report.unblocked_pairs) pairs.push_back({a, b});
  j["unblocked_pairs"] = std::move(pairs);
  return j;
}

nlohmann::ordered_json error_json(std::string_view kind, std::string_view message, int line) {
  nlohmann::ordered_json e;
  e["kind"] = std::string(kind);
  e["message"] = std::string(message);
  if (line > 0) e["line"] = line;
  nlohmann::ordered_json j;
  j["error"] = std::move(e);
  return j;
}

}  // namespace visgrab::io
