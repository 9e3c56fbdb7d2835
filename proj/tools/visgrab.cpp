// visgrab command-line interface. Exit codes: 0 success/true, 1 verified
// false, 2 usage or parse error. Failures print a JSON error object.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "visgrab/blocking.hpp"
#include "visgrab/coloring.hpp"
#include "visgrab/corpus.hpp"
#include "visgrab/empty_polygon.hpp"
#include "visgrab/equivalence.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/io.hpp"
#include "visgrab/search.hpp"
#include "visgrab/svg.hpp"
#include "visgrab/visibility.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace visgrab;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json indices(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

BlockTarget target_from(const ColoredPointSet& s) {
  for (int c : s.colors)
    if (c != s.colors[0]) throw InvalidInput("target points must share one color");
  return BlockTarget::make(s.points, s.colors[0]);
}

int cmd_verify(const std::string& path, int max_col) {
  const auto file = io::read_file(path);
  const auto& s = file.set;
  const auto proper = is_properly_colored(s);
  const int mc = max_collinear(s);
  const int limit = max_col > 0 ? max_col : file.ell.value_or(0);
  json j;
  j["points"] = s.size();
  j["k"] = s.k;
  j["colors_used"] = s.colors_used();
  j["proper"] = proper.proper;
  j["violation"] = proper.violation ? json::array({proper.violation->first, proper.violation->second})
                                    : json(nullptr);
  j["max_collinear"] = mc;
  if (limit > 0) {
    j["max_collinear_limit"] = limit;
    j["max_collinear_ok"] = mc <= limit;
  }
  emit(j);
  return proper.proper && (limit == 0 || mc <= limit) ? 0 : 1;
}

int cmd_chromatic(const std::string& path) {
  const auto s = io::read_file(path).set;
  const auto r = chromatic_number(visibility_graph(s));
  json j;
  j["chi"] = r.chi;
  j["witness_coloring"] = r.witness_coloring;
  j["clique"] = indices(r.clique);
  emit(j);
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& level) {
  const auto x = io::read_file(a).set;
  const auto y = io::read_file(b).set;
  const auto lv = level == "collinear" ? RelationLevel::kCollinearity : RelationLevel::kHullMembership;
  const auto phi = are_equivalent(x, y, lv);
  json j;
  j["equivalent"] = phi.has_value();
  j["level"] = level;
  j["bijection"] = phi ? indices(*phi) : json(nullptr);
  emit(j);
  return phi ? 0 : 1;
}

int cmd_empty_kgon(const std::string& path, int k, int cls) {
  const auto s = io::read_file(path).set;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (cls < 0 || s.colors[i] == cls) members.push_back(i);
  std::vector<Point> pts;
  for (auto i : members) pts.push_back(s.points[i]);
  const auto w = find_empty_convex_kgon(pts, k);
  json j;
  j["k"] = k;
  j["class"] = cls < 0 ? json(nullptr) : json(cls);
  j["found"] = w.has_value();
  if (w) {
    std::vector<std::size_t> idx;
    json coords = json::array();
    for (auto i : w->vertices) {
      idx.push_back(members[i]);
      coords.push_back(io::to_json(s.points[members[i]]));
    }
    j["vertices"] = indices(idx);
    j["coordinates"] = coords;
  }
  emit(j);
  return w ? 0 : 1;
}

int cmd_block_verify(const std::string& target_path, const std::string& blockers_path, int k,
                     bool relaxed) {
  const auto target = target_from(io::read_file(target_path).set);
  const auto blockers = io::read_file(blockers_path).set;
  const auto r = is_k_color_blocked(target, blockers, k, relaxed ? HullMode::kRelaxed : HullMode::kStrict);
  json j = io::to_json(r);
  if (r.valid && target.vertices.size() == 3) {
    const auto c = classify_triangle_blocking(target, blockers);
    j["triangle_instance"] = c.instance ? json(*c.instance) : json(nullptr);
    j["hull_equivalent"] = c.hull_equivalent;
  }
  emit(j);
  return r.valid ? 0 : 1;
}

int cmd_render(const std::string& path, const std::string& out, bool blocked, bool labels) {
  const auto s = io::read_file(path).set;
  SvgStyle style;
  style.blocked_pairs = blocked;
  style.labels = labels;
  io::write_file(out, render_svg(s, style));
  json j;
  j["written"] = out;
  j["marks"] = s.size();
  emit(j);
  return 0;
}

int cmd_corpus(bool verify_all, bool list, const std::string& export_dir) {
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& e : corpus::all())
      io::write_file(export_dir + "/" + e.id + ".txt",
                     "# " + e.provenance + (e.schematic ? " (schematic)" : "") + "\n" +
                         io::serialize(e.set));
  }
  json j;
  if (list || !verify_all) {
    json entries = json::array();
    for (const auto& e : corpus::all())
      entries.push_back({{"id", e.id}, {"points", e.set.size()}, {"schematic", e.schematic},
                         {"provenance", e.provenance}});
    j["entries"] = entries;
  }
  bool ok = true;
  if (verify_all) {
    json checks = json::array();
    for (const auto& c : corpus::verify_all()) {
      ok = ok && c.passed();
      checks.push_back({{"id", c.id},
                        {"status", c.skipped ? "skipped" : (c.passed() ? "pass" : "fail")},
                        {"failures", c.failures}});
    }
    j["checks"] = checks;
    j["all_passed"] = ok;
  }
  emit(j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact visibility graphs, colorings and blockings of planar point sets"};
  app.require_subcommand(1);

  std::string file, file_b, target, blockers, out, level = "hull", mode = "extremal", seed_set,
                                                export_dir;
  int max_col = 0, k = 3, ell = 3, grid = 1, extent = 2, cls = -1;
  std::uint64_t budget = 1'000'000, seed = 0;
  std::size_t target_size = 0, max_points = 0, threads = 0;
  bool grid_only = false, no_symmetry = false, relaxed = false, blocked = false, labels = false,
       verify_all = false, list = false, no_known_bounds = false;

  auto* verify = app.add_subcommand("verify", "proper coloring and collinearity report");
  verify->add_option("file", file)->required();
  verify->add_option("--max-collinear", max_col, "fail when more points are collinear");

  auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number of the visibility graph");
  chromatic->add_option("file", file)->required();

  auto* equiv = app.add_subcommand("equiv", "equivalence of two colored point sets");
  equiv->add_option("a", file)->required();
  equiv->add_option("b", file_b)->required();
  equiv->add_option("--level", level, "hull (default) or collinear")
      ->check(CLI::IsMember({"hull", "collinear"}));

  auto* kgon = app.add_subcommand("empty-kgon", "find an empty convex k-gon");
  kgon->add_option("file", file)->required();
  kgon->add_option("--k", k)->required()->check(CLI::Range(3, 64));
  kgon->add_option("--class", cls, "restrict to one color class");

  auto* search = app.add_subcommand("search", "extremal or blocking search");
  search->add_option("--mode", mode)->check(CLI::IsMember({"extremal", "blocking"}));
  search->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  search->add_option("--ell", ell)->check(CLI::Range(2, 64));
  search->add_option("--grid", grid, "lattice resolution (points per unit)")->check(CLI::PositiveNumber);
  search->add_option("--extent", extent, "extremal lattice half-width")->check(CLI::NonNegativeNumber);
  search->add_option("--budget", budget)->check(CLI::PositiveNumber);
  search->add_option("--seed", seed);
  search->add_option("--target", target, "blocking target file");
  search->add_option("--target-size", target_size, "extremal: stop at this size");
  search->add_option("--max-points", max_points);
  search->add_option("--seed-set", seed_set, "extremal: start from these points");
  search->add_option("--threads", threads);
  search->add_option("--out", out, "also write the report here");
  search->add_flag("--grid-only", grid_only, "lattice positions only");
  search->add_flag("--no-symmetry", no_symmetry);
  search->add_flag("--no-known-bounds", no_known_bounds);

  auto* replay_cmd = app.add_subcommand("replay", "re-verify a search report");
  replay_cmd->add_option("report", file)->required();

  auto* bverify = app.add_subcommand("block-verify", "verify a k-color blocking");
  bverify->add_option("--target", target)->required();
  bverify->add_option("--blockers", blockers)->required();
  bverify->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  bverify->add_flag("--relaxed", relaxed, "allow blockers outside the target hull");

  auto* render = app.add_subcommand("render", "SVG drawing");
  render->add_option("file", file)->required();
  render->add_option("--out", out)->required();
  render->add_flag("--blocked-pairs", blocked);
  render->add_flag("--labels", labels);

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in configurations");
  corpus_cmd->add_flag("--verify-all", verify_all);
  corpus_cmd->add_flag("--list", list);
  corpus_cmd->add_option("--export", export_dir, "write every entry as a point file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(io::error_json("usage", e.what()));
    return 2;
  }

  try {
    if (*verify) return cmd_verify(file, max_col);
    if (*chromatic) return cmd_chromatic(file);
    if (*equiv) return cmd_equiv(file, file_b, level);
    if (*kgon) return cmd_empty_kgon(file, k, cls);
    if (*bverify) return cmd_block_verify(target, blockers, k, relaxed);
    if (*render) return cmd_render(file, out, blocked, labels);
    if (*corpus_cmd) return cmd_corpus(verify_all, list, export_dir);
    if (*replay_cmd) {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot open '" + file + "'", 0);
      json j;
      try {
        j = json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
      }
      const bool ok = replay(search_report_from_json(j));
      emit(json{{"replay", ok}});
      return ok ? 0 : 1;
    }
    if (*search) {
      SearchConfig cfg;
      cfg.mode = mode == "blocking" ? SearchMode::kBlocking : SearchMode::kExtremal;
      cfg.k = k;
      cfg.ell = ell;
      cfg.grid = {grid, extent};
      cfg.budget = budget;
      cfg.seed = seed;
      cfg.intersections = !grid_only;
      cfg.symmetry_breaking = !no_symmetry;
      cfg.known_bounds = !no_known_bounds;
      cfg.max_points = max_points;
      cfg.target_size = target_size;
      cfg.threads = threads;
      SearchReport r;
      if (cfg.mode == SearchMode::kBlocking) {
        if (target.empty()) throw InvalidInput("blocking search needs --target");
        r = search_blocking(target_from(io::read_file(target).set), k, cfg);
      } else {
        if (!seed_set.empty()) cfg.seed_set = io::read_file(seed_set).set;
        r = search_extremal(cfg);
      }
      const json j = to_json(r);
      if (!out.empty()) io::write_file(out, j.dump(2) + "\n");
      emit(j);
      return 0;
    }
  } catch (const ParseError& e) {
    emit(io::error_json("parse_error", e.what(), e.line()));
    return 2;
  } catch (const InvalidInput& e) {
    emit(io::error_json("invalid_input", e.what()));
    return 2;
  } catch (const VerificationFailed& e) {
    emit(io::error_json("verification_failed", e.what()));
    return 1;
  }
  return 2;
}
