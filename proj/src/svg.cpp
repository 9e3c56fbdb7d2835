#include "visgrab/svg.hpp"

#include <array>
#include <cstdio>

#include "visgrab/errors.hpp"

namespace visgrab {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#d62728", "#222222", "#1f77b4", "#2ca02c",
                                                   "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
                                                   "#7f7f7f", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const ColoredPointSet& set, const SvgStyle& style) {
  if (set.empty()) throw InvalidInput("render_svg: empty point set");

  Rational min_x = set.points[0].x, max_x = min_x, min_y = set.points[0].y, max_y = min_y;
  for (const auto& p : set.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  Rational w = max_x - min_x, h = max_y - min_y;
  // A single point or a flat set still gets a square-ish frame.
  if (w.sign() == 0) w = h.sign() == 0 ? Rational(1) : h;
  if (h.sign() == 0) h = w;
  const Rational margin_x = w * Rational(1, 20), margin_y = h * Rational(1, 20);
  const Rational x0 = min_x - margin_x, y1 = max_y + margin_y;
  const double span_x = (w + margin_x + margin_x).to_double();
  const double span_y = (h + margin_y + margin_y).to_double();
  const double scale = style.width / span_x;
  const double height = span_y * scale;

  auto sx = [&](const Point& p) { return (p.x - x0).to_double() * scale; };
  auto sy = [&](const Point& p) { return (y1 - p.y).to_double() * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(style.width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         std::to_string(style.width) + " " + fmt(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(style.width) + "\" height=\"" +
         fmt(height) + "\" fill=\"white\"/>\n";

  if (style.blocked_pairs) {
    out += "<g stroke-width=\"1\" stroke-opacity=\"0.5\">\n";
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (set.colors[i] != set.colors[j]) continue;
        out += "<line x1=\"" + fmt(sx(set.points[i])) + "\" y1=\"" + fmt(sy(set.points[i])) +
               "\" x2=\"" + fmt(sx(set.points[j])) + "\" y2=\"" + fmt(sy(set.points[j])) +
               "\" stroke=\"" + kPalette[set.colors[i] % kPalette.size()] + "\"/>\n";
      }
    out += "</g>\n";
  }

  out += "<g>\n";
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& p = set.points[i];
    out += "<circle class=\"mark color-" + std::to_string(set.colors[i]) + "\" cx=\"" +
           fmt(sx(p)) + "\" cy=\"" + fmt(sy(p)) + "\" r=\"" + fmt(style.mark_radius) +
           "\" fill=\"" + kPalette[set.colors[i] % kPalette.size()] + "\"/>\n";
  }
  out += "</g>\n";

  if (style.labels && !set.names.empty()) {
    out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t i = 0; i < set.size(); ++i)
      if (!set.names[i].empty())
        out += "<text x=\"" + fmt(sx(set.points[i]) + 7) + "\" y=\"" +
               fmt(sy(set.points[i]) - 7) + "\">" + escape(set.names[i]) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace visgrab
