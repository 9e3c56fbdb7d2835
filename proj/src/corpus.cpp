#include "visgrab/corpus.hpp"

#include "visgrab/blocking.hpp"
#include "visgrab/coloring.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/visibility.hpp"

namespace visgrab::corpus {

namespace {

struct Row {
  const char* x;
  const char* y;
  int color;
  const char* name;
};

ColoredPointSet build(std::initializer_list<Row> rows, int k) {
  ColoredPointSet s;
  s.k = k;
  for (const auto& r : rows) {
    s.points.push_back(Point{Rational::parse(r.x), Rational::parse(r.y)});
    s.colors.push_back(r.color);
    s.names.emplace_back(r.name);
  }
  s.validate();
  return s;
}

// Triangle instances: target color 0, blockers red 1, blue 2, green 3.
ColoredPointSet instance_set(int i) {
  switch (i) {
    case 1:
      return build({{"0", "0", 0, "t1"}, {"3", "0", 0, "t2"}, {"1", "2", 0, "t3"},
                    {"4/3", "0", 2, "b"}, {"19/10", "11/10", 1, "r"}, {"3/5", "6/5", 3, "g"}},
                   4);
    case 2:
      return build({{"0", "0", 0, "t1"}, {"3", "0", 0, "t2"}, {"1", "2", 0, "t3"},
                    {"4/3", "0", 2, "b"}, {"19/10", "11/10", 1, "r1"}, {"3/5", "6/5", 1, "r2"},
                    {"11/10", "151/130", 3, "g"}},
                   4);
    case 3:
      return build({{"0", "0", 0, "t1"}, {"3", "0", 0, "t2"}, {"1", "2", 0, "t3"},
                    {"4/3", "0", 2, "b1"}, {"19/10", "11/10", 1, "r1"}, {"3/5", "6/5", 1, "r2"},
                    {"11/10", "151/130", 2, "b2"}, {"73/60", "151/260", 3, "g"}},
                   4);
    case 4:
      return build({{"0", "0", 0, "t1"}, {"3", "0", 0, "t2"}, {"1", "2", 0, "t3"},
                    {"4/3", "0", 2, "b1"}, {"1/4", "1/2", 1, "r1"}, {"16/7", "5/7", 1, "r2"},
                    {"6/5", "3/5", 3, "g"}, {"16/15", "6/5", 2, "b2"}},
                   4);
    case 5:
      return build({{"0", "0", 0, "t1"}, {"3", "0", 0, "t2"}, {"1", "2", 0, "t3"},
                    {"9/10", "4/5", 1, "a"}, {"64/35", "41/35", 1, "a'"},
                    {"7/5", "1", 2, "b"}, {"11/10", "0", 2, "b'"},
                    {"5/4", "1/2", 3, "c"}, {"11/20", "11/10", 3, "c'"}},
                   4);
    default:
      throw InvalidInput("triangle_instance: instance must be in 1..5");
  }
}

std::vector<Entry> build_all() {
  std::vector<Entry> v;

  v.push_back({"twelve-integer", "properly 4-colored 12-point set, at most 3 on a line, integer coordinates",
               build({{"0", "0", 0, "r1"}, {"2", "0", 0, "r2"}, {"-2", "2", 0, "r3"},
                      {"1", "0", 1, "k1"}, {"1", "2", 1, "k2"}, {"-1", "-2", 1, "k3"},
                      {"1", "1", 2, "b1"}, {"-1", "1", 2, "b2"}, {"3", "-1", 2, "b3"},
                      {"0", "1", 3, "g1"}, {"0", "-1", 3, "g2"}, {"2", "3", 3, "g3"}},
                     4),
               false,
               {true, 3, 4, std::nullopt}});

  v.push_back({"twelve-schematic", "properly 4-colored 12-point set known only from rounded decimal coordinates",
               build({{"4", "8", 1, "k1"}, {"10", "8", 1, "k2"}, {"7", "2.8", 1, "k3"},
                      {"7", "8", 3, "g1"}, {"9.43", "3.8", 3, "g2"}, {"-7.21", "-3.01", 3, "g3"},
                      {"8.5", "5.4", 2, "b1"}, {"3.65", "5.4", 2, "b2"}, {"6.07", "23.21", 2, "b3"},
                      {"5.5", "5.4", 0, "r1"}, {"7.93", "9.61", 0, "r2"}, {"22.14", "-1.4", 0, "r3"}},
                     4),
               true,
               {}});

  v.push_back({"mc3-3", "the unique properly 3-colored 6-point set (mc3(3) = 6)", pinwheel(), false,
               {true, 3, 3, std::nullopt}});

  for (int i = 1; i <= 5; ++i)
    v.push_back({"triangle-instance-" + std::to_string(i),
                 "instance " + std::to_string(i) + " of the five 3-color blockings of a triangle",
                 instance_set(i), false, {true, 3, std::nullopt, BlockingExpectation{3, 3, true}}});

  v.push_back({"square-9", "9-point blocking of a convex quadrilateral, square realization",
               build({{"0", "0", 0, "q1"}, {"4", "0", 0, "q2"}, {"4", "4", 0, "q3"}, {"0", "4", 0, "q4"},
                      {"2", "0", 1, "b1"}, {"4", "2", 2, "r1"}, {"2", "4", 1, "b2"}, {"0", "2", 2, "r2"},
                      {"2", "2", 3, "z"}},
                     4),
               false,
               {true, 3, std::nullopt, BlockingExpectation{4, 3, true}}});

  v.push_back({"concave-10", "10-point blocking of a concave red quadruple",
               build({{"2", "-1", 0, "x1"}, {"0", "2", 0, "x2"}, {"-2", "-1", 0, "x3"}, {"0", "0", 0, "x4"},
                      {"5/3", "-1/2", 1, "s12"}, {"-4/3", "-1", 2, "s13"}, {"1", "-1/2", 3, "s14"},
                      {"-1/3", "3/2", 3, "s23"}, {"0", "1", 2, "s24"}, {"-1", "-1/2", 1, "s34"}},
                     4),
               false,
               {true, 3, std::nullopt, BlockingExpectation{4, 3, true}}});

  v.push_back({"concave-10-alt", "second realization of the concave blocking, other spoke ratios",
               build({{"2", "-1", 0, "x1"}, {"0", "2", 0, "x2"}, {"-2", "-1", 0, "x3"}, {"0", "0", 0, "x4"},
                      {"11/7", "-5/14", 1, "s12"}, {"-22/17", "-1", 2, "s13"}, {"4/5", "-2/5", 3, "s14"},
                      {"-8/35", "58/35", 3, "s23"}, {"0", "6/5", 2, "s24"}, {"-1", "-1/2", 1, "s34"}},
                     4),
               false,
               {true, 3, std::nullopt, BlockingExpectation{4, 3, true}}});

  v.push_back({"concave-case1", "concave red quadruple, case 1: side blockers at midpoints",
               build({{"2", "-1", 0, "x1"}, {"0", "2", 0, "x2"}, {"-2", "-1", 0, "x3"}, {"0", "0", 0, "x4"},
                      {"1", "1/2", 1, "s12"}, {"0", "-1", 2, "s13"}, {"1", "-1/2", 3, "s14"},
                      {"-1", "1/2", 3, "s23"}, {"0", "1", 2, "s24"}, {"-1", "-1/2", 1, "s34"}},
                     4),
               false,
               {true, 4, std::nullopt, std::nullopt}});

  v.push_back({"hexagon-regular", "rational surrogate of the regular hexagon (long diagonals concurrent)",
               build({{"2", "0", 0, "h1"}, {"1", "2", 0, "h2"}, {"-1", "2", 0, "h3"},
                      {"-2", "0", 0, "h4"}, {"-1", "-2", 0, "h5"}, {"1", "-2", 0, "h6"}},
                     1),
               false,
               {false, 2, std::nullopt, std::nullopt}});

  v.push_back({"hexagon-perturbed", "hexagon surrogate with one vertex moved, no concurrency",
               build({{"3", "0", 0, "h1"}, {"1", "3", 0, "h2"}, {"-1", "2", 0, "h3"},
                      {"-2", "0", 0, "h4"}, {"-1", "-2", 0, "h5"}, {"1", "-2", 0, "h6"}},
                     1),
               false,
               {false, 2, std::nullopt, std::nullopt}});
  return v;
}

}  // namespace

ColoredPointSet triangle_instance(int instance) { return instance_set(instance); }

ColoredPointSet pinwheel() {
  return build({{"9/10", "4/5", 0, "a"}, {"64/35", "41/35", 0, "a'"},
                {"7/5", "1", 1, "b"}, {"11/10", "0", 1, "b'"},
                {"5/4", "1/2", 2, "c"}, {"11/20", "11/10", 2, "c'"}},
               3);
}

const std::vector<Entry>& all() {
  static const std::vector<Entry> entries = build_all();
  return entries;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : all())
    if (e.id == id) return e;
  throw InvalidInput("unknown corpus entry: " + id);
}

EntryCheck verify(const Entry& e) {
  EntryCheck check{e.id, e.schematic, {}};
  if (e.schematic) return check;
  const auto& x = e.set;
  auto fail = [&](std::string what) { check.failures.push_back(std::move(what)); };

  if (e.expect.proper && is_properly_colored(x).proper != *e.expect.proper)
    fail("proper coloring differs from expectation");
  if (e.expect.max_collinear) {
    const int got = max_collinear(x);
    if (got != *e.expect.max_collinear)
      fail("max_collinear " + std::to_string(got) + ", expected " +
           std::to_string(*e.expect.max_collinear));
  }
  if (e.expect.chi) {
    const int got = chromatic_number(visibility_graph(x)).chi;
    if (got != *e.expect.chi)
      fail("chi " + std::to_string(got) + ", expected " + std::to_string(*e.expect.chi));
  }
  if (const auto& b = e.expect.blocking) {
    std::vector<Point> u(x.points.begin(), x.points.begin() + static_cast<long>(b->target_size));
    ColoredPointSet blockers;
    blockers.k = x.k;
    for (std::size_t i = b->target_size; i < x.size(); ++i)
      blockers.push_back(x.points[i], x.colors[i]);
    const auto target = BlockTarget::make(u, x.colors[0]);
    const auto report = is_k_color_blocked(target, blockers, b->k);
    if (report.valid != b->valid)
      fail(std::string("blocking verdict ") + std::string(to_string(report.reason)));
    if (!is_color_empty(std::vector<std::size_t>(x.class_indices(x.colors[0])), x))
      fail("target is not color-empty");
  }
  return check;
}

std::vector<EntryCheck> verify_all() {
  std::vector<EntryCheck> out;
  for (const auto& e : all()) out.push_back(verify(e));
  return out;
}

}  // namespace visgrab::corpus
