#include "visgrab/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>

#include "visgrab/coloring.hpp"
#include "visgrab/errors.hpp"
#include "visgrab/io.hpp"
#include "visgrab/parallel.hpp"
#include "visgrab/visibility.hpp"

namespace visgrab {

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kExtremal ? "extremal" : "blocking";
}

namespace {

constexpr std::size_t kDefaultExtremalCap = 16;
constexpr std::uint64_t kRootStream = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed ^ (stream + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

struct Context {
  SearchMode mode = SearchMode::kExtremal;
  int k = 1;
  std::vector<Point> lattice;
  bool intersections = true;
  bool symmetry = false;
  std::size_t max_points = Configuration::kMaxPoints;  // extremal: total; blocking: |B|
  std::size_t target_size = 0;
  // Extremal: intersection candidates are kept inside this box.
  Rational box_lo_x, box_hi_x, box_lo_y, box_hi_y;
  // Blocking: the first target_count points are the target.
  std::size_t target_count = 0;
  bool convex_target = false;
};

struct Child {
  Point p;
  int color = 0;
  int delta = 0;
  std::uint64_t key = 0;
  Configuration::Probe probe;
  bool free = false;
};

// Positions strictly inside the segment of a debt.
std::vector<Point> segment_candidates(const Configuration& conf, const Configuration::Debt& d,
                                      const std::vector<Point>& lattice, bool intersections) {
  const auto& pts = conf.points();
  const Point& a = pts[d.u];
  const Point& b = pts[d.v];
  std::vector<Point> out;
  for (const auto& g : lattice)
    if (strictly_between(a, b, g)) out.push_back(g);
  if (intersections) {
    out.push_back(midpoint(a, b));
    const auto& line = conf.lines()[d.line];
    for (const auto& other : conf.lines()) {
      if (other.mask & line.mask) continue;
      auto x = line_intersection(a, b, pts[other.members[0]], pts[other.members[1]]);
      if (x && strictly_between(a, b, *x)) out.push_back(std::move(*x));
    }
  }
  sort_unique(out);
  return out;
}

class Engine {
 public:
  Engine(const Context& ctx, Configuration conf, std::uint64_t rng_seed, std::uint64_t budget)
      : ctx_(ctx), conf_(std::move(conf)), rng_(rng_seed), budget_(budget) {}

  // Size limit for this pass (total points when extremal, blockers when blocking).
  void set_cap(std::size_t cap) { cap_ = cap; }

  void set_cancel(const std::atomic<std::size_t>* winner, std::size_t index) {
    winner_ = winner;
    index_ = index;
  }

  // Counts the node, records it when it has no debts and fills `kids`.
  // Returns false when the search must stop (target reached or witness found).
  bool visit(std::vector<Child>& kids) {
    kids.clear();
    ++nodes_;
    if (winner_ && (nodes_ & 1023) == 0 && winner_->load(std::memory_order_relaxed) < index_) {
      cancelled_ = true;
      return false;
    }
    const auto choice = conf_.pick_debt();
    if (choice.dead) return true;
    if (!choice.debt) {
      record();
      if (stopped_) return false;
      if (ctx_.mode == SearchMode::kBlocking) return true;
    }
    if (ctx_.mode == SearchMode::kExtremal) {
      if (conf_.size() >= cap_) return true;
    } else if (blocking_bound_exceeded()) {
      return true;
    }
    if (choice.debt)
      debt_children(*choice.debt, kids);
    else
      free_children(kids);
    std::stable_sort(kids.begin(), kids.end(), [](const Child& x, const Child& y) {
      return x.delta != y.delta ? x.delta < y.delta : x.key < y.key;
    });
    return true;
  }

  void dfs() {
    if (halted()) return;
    if (nodes_ >= budget_) {
      aborted_ = true;
      return;
    }
    std::vector<Child> kids;
    if (!visit(kids)) return;
    for (const auto& c : kids) {
      push_child(c);
      dfs();
      pop_child();
      if (halted()) return;
    }
  }

  void push_child(const Child& c) {
    const bool tracked = c.free && lex_counts();
    conf_.push(c.p, c.color, c.probe);
    stack_.push_back(tracked);
    if (tracked) free_trail_.push_back(c.p);
  }

  void pop_child() {
    const bool tracked = stack_.back();
    stack_.pop_back();
    if (tracked) free_trail_.pop_back();
    conf_.pop();
  }

  bool halted() const { return aborted_ || stopped_ || cancelled_; }
  bool cancelled() const { return cancelled_; }
  bool aborted() const { return aborted_; }
  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }
  const Configuration& conf() const { return conf_; }
  const std::optional<ColoredPointSet>& best() const { return best_; }
  std::size_t best_size() const { return best_size_; }
  const std::vector<Point>& free_trail() const { return free_trail_; }

  void inherit(const Engine& root) {
    best_ = root.best_;
    best_size_ = root.best_size_;
    free_trail_ = root.free_trail_;
  }

 private:
  // With symmetry breaking the first two points are pinned by the quotient,
  // so ordering among free insertions starts after them.
  bool lex_counts() const { return !ctx_.symmetry || conf_.size() >= 2; }

  void record() {
    if (ctx_.mode == SearchMode::kExtremal) {
      if (!best_ || conf_.size() > best_size_) {
        best_ = conf_.to_point_set(ctx_.k);
        best_size_ = conf_.size();
      }
      if (ctx_.target_size > 0 && best_size_ >= ctx_.target_size) stopped_ = true;
    } else {
      ColoredPointSet b;
      b.k = ctx_.k + 1;
      for (std::size_t i = ctx_.target_count; i < conf_.size(); ++i)
        b.push_back(conf_.points()[i], conf_.colors()[i]);
      best_ = std::move(b);
      best_size_ = conf_.size() - ctx_.target_count;
      stopped_ = true;
    }
  }

  bool blocking_bound_exceeded() const {
    const std::size_t placed = conf_.size() - ctx_.target_count;
    if (placed >= cap_) return true;
    if (!ctx_.convex_target) return false;
    // Open edges need one private blocker each; a point lies on at most
    // floor(m / 2) of the diagonals (pairwise disjoint endpoints).
    const std::size_t m = ctx_.target_count;
    std::size_t edges = 0, diagonals = 0;
    for (const auto& line : conf_.lines()) {
      const auto& mem = line.members;
      for (std::size_t i = 0; i + 1 < mem.size(); ++i) {
        const std::size_t a = mem[i], b = mem[i + 1];
        if (a >= m || b >= m) continue;
        const std::size_t lo = std::min(a, b), hi = std::max(a, b);
        if (hi == lo + 1 || (lo == 0 && hi == m - 1))
          ++edges;
        else
          ++diagonals;
      }
    }
    const std::size_t per = std::max<std::size_t>(1, m / 2);
    return placed + edges + (diagonals + per - 1) / per > cap_;
  }

  int max_color() const {
    int c = ctx_.mode == SearchMode::kBlocking ? 0 : -1;
    for (std::size_t i = ctx_.target_count; i < conf_.size(); ++i)
      c = std::max(c, conf_.colors()[i]);
    return c;
  }

  // Colors a new point may take: the next unused color at most.
  std::pair<int, int> color_range() const {
    const int top = max_color() + 1;
    if (ctx_.mode == SearchMode::kBlocking) return {1, std::min(ctx_.k, top)};
    return {0, std::min(ctx_.k - 1, top)};
  }

  void add_children(const Point& p, bool free, int forbidden, std::vector<Child>& kids) {
    auto probe = conf_.probe(p);
    if (!probe.valid) return;
    const auto [lo, hi] = color_range();
    for (int c = lo; c <= hi; ++c) {
      if (c == forbidden) continue;
      kids.push_back(Child{p, c, conf_.debt_delta(probe, c), rng_(), probe, free});
    }
  }

  void debt_children(const Configuration::Debt& d, std::vector<Child>& kids) {
    for (const auto& p : segment_candidates(conf_, d, ctx_.lattice, ctx_.intersections)) {
      if (ctx_.mode == SearchMode::kExtremal && ctx_.symmetry && !symmetry_allows(p)) continue;
      add_children(p, false, conf_.colors()[d.u], kids);
    }
  }

  void free_children(std::vector<Child>& kids) {
    std::vector<Point> cands;
    for (const auto& g : ctx_.lattice) cands.push_back(g);
    if (ctx_.intersections) {
      const auto& lines = conf_.lines();
      const auto& pts = conf_.points();
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          if (lines[i].mask & lines[j].mask) continue;
          auto x = line_intersection(pts[lines[i].members[0]], pts[lines[i].members[1]],
                                     pts[lines[j].members[0]], pts[lines[j].members[1]]);
          if (!x || x->x < ctx_.box_lo_x || x->x > ctx_.box_hi_x || x->y < ctx_.box_lo_y ||
              x->y > ctx_.box_hi_y)
            continue;
          cands.push_back(std::move(*x));
        }
    }
    sort_unique(cands);
    const bool lex = lex_counts() && !free_trail_.empty();
    for (const auto& p : cands) {
      if (lex && !(free_trail_.back() < p)) continue;
      if (ctx_.symmetry && !symmetry_allows(p)) continue;
      add_children(p, true, -1, kids);
    }
  }

  bool symmetry_allows(const Point& p) const {
    const auto& pts = conf_.points();
    if (pts.empty()) return p.x.sign() == 0 && p.y.sign() == 0;
    if (pts.size() == 1) return p.y.sign() == 0 && p.x.sign() > 0;
    if (p.y.sign() >= 0) return true;
    for (const auto& q : pts)
      if (q.y.sign() != 0) return true;
    return false;
  }

  const Context& ctx_;
  Configuration conf_;
  std::mt19937_64 rng_;
  std::uint64_t budget_;
  std::size_t cap_ = Configuration::kMaxPoints;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stopped_ = false;
  bool cancelled_ = false;
  const std::atomic<std::size_t>* winner_ = nullptr;
  std::size_t index_ = 0;
  std::optional<ColoredPointSet> best_;
  std::size_t best_size_ = 0;
  std::vector<Point> free_trail_;
  std::vector<bool> stack_;  // whether each pushed child extended free_trail_
};

struct Outcome {
  std::optional<ColoredPointSet> best;
  std::size_t best_size = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::size_t jobs = 0;
};

// Expands forced moves from the root, splits the first real branching into
// one job per child and reduces the job results in index order.
Outcome run(const Context& ctx, Configuration root_conf, const SearchConfig& cfg) {
  Engine root(ctx, std::move(root_conf), mix_seed(cfg.seed, kRootStream), cfg.budget);
  root.set_cap(ctx.max_points);
  std::vector<Child> kids;
  Outcome out;
  while (true) {
    if (root.nodes() >= cfg.budget) {
      out.best = root.best();
      out.best_size = root.best_size();
      out.nodes = root.nodes();
      return out;
    }
    if (!root.visit(kids)) {
      out.best = root.best();
      out.best_size = root.best_size();
      out.nodes = root.nodes();
      return out;
    }
    if (kids.size() != 1) break;
    root.push_child(kids[0]);
  }
  if (kids.empty()) {
    out.best = root.best();
    out.best_size = root.best_size();
    out.nodes = root.nodes();
    out.exhausted = true;
    return out;
  }

  const std::size_t jobs = kids.size();
  const std::uint64_t left = cfg.budget - root.nodes();
  const std::uint64_t share = std::max<std::uint64_t>(1, left / jobs);
  std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
  struct JobResult {
    std::optional<ColoredPointSet> best;
    std::size_t best_size = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;
    bool stopped = false;
  };
  std::vector<JobResult> results(jobs);
  run_jobs(
      jobs,
      [&](std::size_t i) {
        Engine e(ctx, root.conf(), mix_seed(cfg.seed, i), share);
        e.inherit(root);
        e.set_cancel(&winner, i);
        e.push_child(kids[i]);
        // Iterative deepening on the size cap: small configurations first.
        const std::size_t base = ctx.mode == SearchMode::kExtremal
                                     ? e.conf().size()
                                     : e.conf().size() - ctx.target_count;
        for (std::size_t cap = std::min(base, ctx.max_points); cap <= ctx.max_points; ++cap) {
          e.set_cap(cap);
          e.dfs();
          if (e.halted()) break;
        }
        results[i] = {e.best(), e.best_size(), e.nodes(), e.aborted(), e.stopped()};
        if (e.stopped()) {
          std::size_t cur = winner.load();
          while (i < cur && !winner.compare_exchange_weak(cur, i)) {
          }
        }
      },
      cfg.threads);

  out.jobs = jobs;
  out.nodes = root.nodes();
  const std::size_t win = winner.load();
  if (win < jobs) {
    for (std::size_t i = 0; i <= win; ++i) out.nodes += results[i].nodes;
    out.best = results[win].best;
    out.best_size = results[win].best_size;
    return out;
  }
  out.exhausted = true;
  std::size_t pick = 0;
  for (std::size_t i = 0; i < jobs; ++i) {
    out.nodes += results[i].nodes;
    out.exhausted = out.exhausted && !results[i].aborted;
    if (results[i].best_size > results[pick].best_size) pick = i;
  }
  out.best = results[pick].best;
  out.best_size = results[pick].best_size;
  if (!out.best && root.best()) {
    out.best = root.best();
    out.best_size = root.best_size();
  }
  return out;
}

SearchReport unpruned_extremal(const SearchConfig& cfg, const std::vector<Point>& cands) {
  if (cands.size() > 20)
    throw InvalidInput("unpruned search supports at most 20 candidate positions");
  SearchReport r;
  r.exhausted = true;
  const std::uint64_t total = std::uint64_t{1} << cands.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (r.nodes_expanded >= cfg.budget) {
      r.exhausted = false;
      break;
    }
    ++r.nodes_expanded;
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= r.best_size) continue;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (mask >> i & 1) pts.push_back(cands[i]);
    if (max_collinear(pts) > cfg.ell) continue;
    auto coloring = k_colorable(visibility_graph(pts), cfg.k);
    if (!coloring) continue;
    r.best = ColoredPointSet::make(std::move(pts), std::move(*coloring), cfg.k);
    r.best_size = size;
  }
  return r;
}

void check_common(const SearchConfig& cfg) {
  if (cfg.k < 1) throw InvalidInput("search needs k >= 1");
  if (cfg.ell < 2) throw InvalidInput("search needs ell >= 2");
  if (cfg.budget == 0) throw InvalidInput("search needs a positive budget");
}

std::size_t known_mc(int ell, int k) {
  if (k == 1) return 1;
  if (k == 2) return static_cast<std::size_t>(ell);
  if (ell == 3 && k == 3) return 6;
  if (ell == 3 && k == 4) return 12;
  return 0;
}

}  // namespace

SearchReport search_extremal(const SearchConfig& cfg) {
  check_common(cfg);
  if (cfg.mode != SearchMode::kExtremal) throw InvalidInput("search_extremal needs mode extremal");
  std::vector<Point> cands = cfg.candidates.empty() ? grid_points(cfg.grid) : cfg.candidates;
  sort_unique(cands);
  if (cands.empty()) throw InvalidInput("search_extremal: the grid has no points");

  SearchReport report;
  if (!cfg.pruning) {
    report = unpruned_extremal(cfg, cands);
  } else {
    Context ctx;
    ctx.mode = SearchMode::kExtremal;
    ctx.k = cfg.k;
    ctx.lattice = cands;
    ctx.intersections = cfg.intersections;
    ctx.symmetry = cfg.symmetry_breaking && !cfg.seed_set;
    ctx.max_points = std::min(cfg.max_points ? cfg.max_points : kDefaultExtremalCap,
                              Configuration::kMaxPoints);
    ctx.target_size = cfg.target_size;
    ctx.box_lo_x = ctx.box_hi_x = cands[0].x;
    ctx.box_lo_y = ctx.box_hi_y = cands[0].y;
    for (const auto& p : cands) {
      ctx.box_lo_x = std::min(ctx.box_lo_x, p.x);
      ctx.box_hi_x = std::max(ctx.box_hi_x, p.x);
      ctx.box_lo_y = std::min(ctx.box_lo_y, p.y);
      ctx.box_hi_y = std::max(ctx.box_hi_y, p.y);
    }
    Configuration conf(cfg.ell);
    if (cfg.seed_set) {
      cfg.seed_set->validate();
      for (std::size_t i = 0; i < cfg.seed_set->size(); ++i) {
        if (cfg.seed_set->colors[i] >= cfg.k) throw InvalidInput("seed set uses more than k colors");
        conf.push(cfg.seed_set->points[i], cfg.seed_set->colors[i]);
      }
    }
    const Outcome o = run(ctx, std::move(conf), cfg);
    report.best = o.best;
    report.best_size = o.best_size;
    report.nodes_expanded = o.nodes;
    report.exhausted = o.exhausted;
    report.jobs = o.jobs;
  }
  report.mode = SearchMode::kExtremal;
  report.k = cfg.k;
  report.ell = cfg.ell;
  report.seed = cfg.seed;
  report.budget = cfg.budget;
  return report;
}

SearchReport search_blocking(const BlockTarget& target, int k, const SearchConfig& cfg) {
  check_common(cfg);
  if (k < 1) throw InvalidInput("search_blocking needs k >= 1");
  if (cfg.mode != SearchMode::kBlocking) throw InvalidInput("search_blocking needs mode blocking");
  if (target.vertices.size() < 3) throw InvalidInput("search_blocking: target needs 3 points");
  if (target.vertices.size() + Configuration::kMaxPoints / 2 > Configuration::kMaxPoints)
    throw InvalidInput("search_blocking: target too large");

  // Internally the target has color 0 and blockers use 1..k; they are mapped
  // back onto the first k colors other than the target's.
  std::vector<int> palette;
  for (int c = 0; static_cast<int>(palette.size()) < k; ++c)
    if (c != target.color) palette.push_back(c);

  Context ctx;
  ctx.mode = SearchMode::kBlocking;
  ctx.k = k;
  ctx.lattice = cfg.candidates.empty() ? grid_points_in_hull(target.vertices, cfg.grid.resolution)
                                       : cfg.candidates;
  sort_unique(ctx.lattice);
  ctx.intersections = cfg.intersections;
  ctx.target_count = target.vertices.size();
  ctx.convex_target = target.is_convex();
  std::size_t cap = Configuration::kMaxPoints - target.vertices.size();
  // Blockers of a convex target see each other exactly as they would alone,
  // so they form a proper k-colored set. A reflex vertex can hide them.
  if (cfg.known_bounds && ctx.convex_target)
    if (const std::size_t mc = known_mc(cfg.ell, k); mc > 0) cap = std::min(cap, mc);
  if (cfg.max_points) cap = std::min(cap, cfg.max_points);
  ctx.max_points = cap;

  Configuration conf(cfg.ell);
  for (const auto& v : target.vertices) conf.push(v, 0);
  const Outcome o = run(ctx, std::move(conf), cfg);

  SearchReport report;
  report.mode = SearchMode::kBlocking;
  report.k = k;
  report.ell = cfg.ell;
  report.seed = cfg.seed;
  report.budget = cfg.budget;
  report.target = target.as_point_set();
  if (o.best) {
    ColoredPointSet b = *o.best;
    for (int& c : b.colors) c = palette[static_cast<std::size_t>(c - 1)];
    b.k = std::max(target.color, palette.back()) + 1;
    report.best = std::move(b);
    report.best_size = o.best_size;
  }
  report.nodes_expanded = o.nodes;
  report.exhausted = o.exhausted;
  report.jobs = o.jobs;
  return report;
}

bool replay(const SearchReport& report) {
  if (!report.best) {
    if (report.best_size != 0) throw VerificationFailed("report has a size but no witness");
    return true;
  }
  const auto& best = *report.best;
  try {
    best.validate();
  } catch (const InvalidInput& e) {
    throw VerificationFailed(std::string("corrupt witness: ") + e.what());
  }
  if (best.size() != report.best_size) throw VerificationFailed("witness size does not match");

  if (report.mode == SearchMode::kExtremal) {
    for (int c : best.colors)
      if (c >= report.k) return false;
    return is_properly_colored(best).proper && max_collinear(best) <= report.ell;
  }
  if (!report.target || report.target->empty())
    throw VerificationFailed("blocking report without a target");
  const auto& t = *report.target;
  for (int c : t.colors)
    if (c != t.colors[0]) throw VerificationFailed("blocking target is not unicolored");
  const BlockTarget target = BlockTarget::make(t.points, t.colors[0]);
  for (int c : best.colors)
    if (c == target.color) return false;
  if (max_collinear(combine(target, best)) > report.ell) return false;
  return is_k_color_blocked(target, best, report.k).valid;
}

nlohmann::ordered_json to_json(const SearchReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(r.mode));
  j["k"] = r.k;
  j["ell"] = r.ell;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["jobs"] = r.jobs;
  j["best_size"] = r.best_size;
  j["nodes_expanded"] = r.nodes_expanded;
  j["exhausted"] = r.exhausted;
  j["target"] = r.target ? io::to_json(*r.target) : nlohmann::ordered_json(nullptr);
  j["best"] = r.best ? io::to_json(*r.best) : nlohmann::ordered_json(nullptr);
  return j;
}

SearchReport search_report_from_json(const nlohmann::ordered_json& j) {
  try {
    SearchReport r;
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "extremal")
      r.mode = SearchMode::kExtremal;
    else if (mode == "blocking")
      r.mode = SearchMode::kBlocking;
    else
      throw InvalidInput("unknown search mode '" + mode + "'");
    r.k = j.at("k").get<int>();
    r.ell = j.at("ell").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.budget = j.at("budget").get<std::uint64_t>();
    r.jobs = j.at("jobs").get<std::size_t>();
    r.best_size = j.at("best_size").get<std::size_t>();
    r.nodes_expanded = j.at("nodes_expanded").get<std::uint64_t>();
    r.exhausted = j.at("exhausted").get<bool>();
    if (!j.at("target").is_null()) r.target = io::point_set_from_json(j["target"]);
    if (!j.at("best").is_null()) r.best = io::point_set_from_json(j["best"]);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed search report: ") + e.what());
  }
}

SamplerResult sample_blockings(const BlockTarget& target, int k, std::uint64_t trials,
                               std::size_t max_blockers, std::uint64_t seed, int resolution,
                               int ell, std::size_t threads) {
  if (k < 1) throw InvalidInput("sample_blockings needs k >= 1");
  std::vector<int> palette;
  for (int c = 0; static_cast<int>(palette.size()) < k; ++c)
    if (c != target.color) palette.push_back(c);
  const auto lattice = grid_points_in_hull(target.vertices, resolution);
  const std::size_t m = target.vertices.size();
  max_blockers = std::min(max_blockers, Configuration::kMaxPoints - m);

  // Trials are sharded into fixed blocks; each trial has its own stream.
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<SamplerResult> parts(blocks);
  run_jobs(
      blocks,
      [&](std::size_t b) {
        SamplerResult& part = parts[b];
        for (std::uint64_t t = b * kBlock; t < std::min(trials, (b + 1) * kBlock); ++t) {
          std::mt19937_64 rng(mix_seed(seed, t));
          Configuration conf(ell);
          for (const auto& v : target.vertices) conf.push(v, 0);
          while (conf.size() - m < max_blockers && conf.debt_count() > 0) {
            std::vector<Configuration::Debt> debts;
            for (std::uint32_t l = 0; l < conf.lines().size(); ++l) {
              const auto& mem = conf.lines()[l].members;
              for (std::size_t i = 0; i + 1 < mem.size(); ++i)
                if (conf.colors()[mem[i]] == conf.colors()[mem[i + 1]])
                  debts.push_back({mem[i], mem[i + 1], l});
            }
            const auto d = debts[rng() % debts.size()];
            auto cands = segment_candidates(conf, d, lattice, /*intersections=*/true);
            std::shuffle(cands.begin(), cands.end(), rng);
            bool placed = false;
            for (const auto& p : cands) {
              const auto probe = conf.probe(p);
              if (!probe.valid) continue;
              std::vector<int> colors;
              for (int c = 1; c <= k; ++c)
                if (c != conf.colors()[d.u]) colors.push_back(c);
              if (colors.empty()) break;
              conf.push(p, colors[rng() % colors.size()], probe);
              placed = true;
              break;
            }
            if (!placed) break;
          }
          ColoredPointSet blockers;
          blockers.k = std::max(target.color, palette.back()) + 1;
          for (std::size_t i = m; i < conf.size(); ++i)
            blockers.push_back(conf.points()[i], palette[static_cast<std::size_t>(conf.colors()[i] - 1)]);
          ++part.trials;
          if (conf.debt_count() == 0) ++part.completed;
          if (is_k_color_blocked(target, blockers, k).valid) {
            ++part.valid;
            if (!part.first_valid) part.first_valid = blockers;
          }
        }
      },
      threads);

  SamplerResult total;
  for (auto& p : parts) {
    total.trials += p.trials;
    total.completed += p.completed;
    total.valid += p.valid;
    if (!total.first_valid && p.first_valid) total.first_valid = std::move(p.first_valid);
  }
  return total;
}

}  // namespace visgrab
