#include "visgrab/search_space.hpp"

#include <algorithm>

#include "visgrab/errors.hpp"

namespace visgrab {

std::vector<Point> grid_points(const GridSpec& grid) {
  if (grid.resolution < 1 || grid.extent < 0)
    throw InvalidInput("grid needs resolution >= 1 and extent >= 0");
  const long r = grid.resolution;
  const long e = static_cast<long>(grid.extent) * r;
  std::vector<Point> out;
  for (long i = -e; i <= e; ++i)
    for (long j = -e; j <= e; ++j) out.push_back(Point{Rational(i, r), Rational(j, r)});
  return out;
}

std::vector<Point> grid_points_in_hull(std::span<const Point> hull_of, int resolution) {
  if (resolution < 1) throw InvalidInput("grid resolution must be at least 1");
  if (hull_of.empty()) return {};
  Rational lo_x = hull_of[0].x, hi_x = lo_x, lo_y = hull_of[0].y, hi_y = lo_y;
  for (const auto& p : hull_of) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  auto floor_scaled = [&](const Rational& v) {
    const mpq_class s = v.value() * resolution;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return f.get_si();
  };
  std::vector<Point> out;
  for (long i = floor_scaled(lo_x); i <= floor_scaled(hi_x) + 1; ++i)
    for (long j = floor_scaled(lo_y); j <= floor_scaled(hi_y) + 1; ++j) {
      Point p{Rational(i, resolution), Rational(j, resolution)};
      if (std::find(hull_of.begin(), hull_of.end(), p) != hull_of.end()) continue;
      if (point_in_convex_hull(p, hull_of, /*strict=*/false)) out.push_back(std::move(p));
    }
  return out;
}

bool Configuration::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

Configuration::Probe Configuration::probe(const Point& p) const {
  Probe pr;
  if (points_.size() >= kMaxPoints || contains(p)) return pr;
  for (std::uint32_t l = 0; l < lines_.size(); ++l) {
    const auto& line = lines_[l];
    // A line through an already covered point would coincide with the line covering it.
    if (pr.covered & line.mask) continue;
    if (orient_sign(points_[line.members[0]], points_[line.members[1]], p) != 0) continue;
    if (static_cast<int>(line.members.size()) >= ell_) return pr;
    std::uint32_t pos = 0;
    while (pos < line.members.size() && points_[line.members[pos]] < p) ++pos;
    pr.joins.emplace_back(l, pos);
    pr.covered |= line.mask;
  }
  pr.valid = true;
  return pr;
}

int Configuration::debt_delta(const Probe& probe, int color) const {
  int delta = 0;
  for (auto [l, pos] : probe.joins) {
    const auto& m = lines_[l].members;
    const int pred = pos > 0 ? colors_[m[pos - 1]] : -1;
    const int succ = pos < m.size() ? colors_[m[pos]] : -1;
    delta += (pred == color) + (succ == color);
    if (pred >= 0 && pred == succ) --delta;
  }
  for (std::size_t q = 0; q < points_.size(); ++q)
    if (!(probe.covered >> q & 1) && colors_[q] == color) ++delta;
  return delta;
}

void Configuration::push(const Point& p, int color, const Probe& probe) {
  const auto idx = static_cast<std::uint8_t>(points_.size());
  undo_.push_back({lines_.size(), probe.joins, debts_});
  debts_ += debt_delta(probe, color);
  for (auto [l, pos] : probe.joins) {
    auto& line = lines_[l];
    line.members.insert(line.members.begin() + pos, idx);
    line.mask |= std::uint64_t{1} << idx;
  }
  for (std::size_t q = 0; q < points_.size(); ++q) {
    if (probe.covered >> q & 1) continue;
    Line line;
    line.mask = (std::uint64_t{1} << q) | (std::uint64_t{1} << idx);
    if (points_[q] < p)
      line.members = {static_cast<std::uint8_t>(q), idx};
    else
      line.members = {idx, static_cast<std::uint8_t>(q)};
    lines_.push_back(std::move(line));
  }
  points_.push_back(p);
  colors_.push_back(color);
}

void Configuration::push(const Point& p, int color) {
  const Probe pr = probe(p);
  if (!pr.valid) throw InvalidInput("cannot add " + p.to_string() + " to the configuration");
  push(p, color, pr);
}

void Configuration::pop() {
  const Undo u = std::move(undo_.back());
  undo_.pop_back();
  lines_.resize(u.lines_before);
  const std::uint64_t bit = std::uint64_t{1} << (points_.size() - 1);
  for (auto [l, pos] : u.joins) {
    auto& line = lines_[l];
    line.members.erase(line.members.begin() + pos);
    line.mask &= ~bit;
  }
  debts_ = u.debts_before;
  points_.pop_back();
  colors_.pop_back();
}

Configuration::DebtChoice Configuration::pick_debt() const {
  DebtChoice choice;
  if (debts_ == 0) return choice;
  std::size_t best_size = 0;
  for (std::uint32_t l = 0; l < lines_.size(); ++l) {
    const auto& m = lines_[l].members;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      if (colors_[m[i]] != colors_[m[i + 1]]) continue;
      if (static_cast<int>(m.size()) >= ell_) {
        choice.dead = true;
        choice.debt = Debt{m[i], m[i + 1], l};
        return choice;
      }
      if (m.size() > best_size) {
        best_size = m.size();
        choice.debt = Debt{m[i], m[i + 1], l};
      }
    }
  }
  return choice;
}

ColoredPointSet Configuration::to_point_set(int k) const {
  ColoredPointSet s;
  s.points = points_;
  s.colors = colors_;
  s.k = k;
  return s;
}

}  // namespace visgrab
