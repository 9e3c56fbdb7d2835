#include "visgrab/coloring.hpp"

#include <algorithm>
#include <bit>

#include "visgrab/errors.hpp"

namespace visgrab {

ProperColoringReport is_properly_colored(const VisibilityGraph& graph, std::span<const int> colors) {
  if (colors.size() != graph.size()) throw InvalidInput("coloring size differs from graph size");
  ProperColoringReport report;
  for (std::size_t i = 0; i < graph.size(); ++i)
    for (std::size_t j = i + 1; j < graph.size(); ++j)
      if (colors[i] == colors[j] && graph.adjacent(i, j)) {
        report.proper = false;
        report.violation = std::make_pair(i, j);
        return report;
      }
  return report;
}

ProperColoringReport is_properly_colored(const ColoredPointSet& set) {
  return is_properly_colored(visibility_graph(set), set.colors);
}

namespace {

std::vector<std::size_t> max_clique_small(const VisibilityGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::uint64_t> nbr(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (graph.adjacent(u, v)) nbr[u] |= std::uint64_t{1} << v;

  std::vector<std::size_t> best, current;
  auto expand = [&](auto&& self, std::uint64_t candidates) -> void {
    if (candidates == 0) {
      if (current.size() > best.size()) best = current;
      return;
    }
    while (candidates != 0) {
      if (current.size() + std::popcount(candidates) <= best.size()) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      current.push_back(v);
      self(self, candidates & nbr[v]);
      current.pop_back();
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  expand(expand, all);
  return best;
}

std::vector<std::size_t> greedy_clique(const VisibilityGraph& graph) {
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < graph.size(); ++start) {
    std::vector<std::size_t> clique{start};
    for (std::size_t v = 0; v < graph.size(); ++v) {
      if (v == start) continue;
      if (std::all_of(clique.begin(), clique.end(),
                      [&](std::size_t u) { return graph.adjacent(u, v); }))
        clique.push_back(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

// DSATUR backtracking for a fixed color budget. The supplied clique is colored
// 0..q-1 up front; afterwards a fresh color is only ever the next unused one.
class DsaturSearch {
 public:
  DsaturSearch(const VisibilityGraph& graph, int k)
      : graph_(graph), n_(graph.size()), k_(k), color_(n_, -1),
        forbidden_(n_ * static_cast<std::size_t>(k), 0), saturation_(n_, 0), adj_(n_) {
    for (std::size_t u = 0; u < n_; ++u) adj_[u] = graph.neighbors(u);
  }

  std::optional<std::vector<int>> run(const std::vector<std::size_t>& clique) {
    if (static_cast<int>(clique.size()) > k_) return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
    used_ = static_cast<int>(clique.size());
    if (!solve(clique.size())) return std::nullopt;
    return color_;
  }

 private:
  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (std::size_t u : adj_[v])
      if (forbidden_[u * k_ + c]++ == 0) ++saturation_[u];
  }
  void unassign(std::size_t v) {
    const int c = color_[v];
    color_[v] = -1;
    for (std::size_t u : adj_[v])
      if (--forbidden_[u * k_ + c] == 0) --saturation_[u];
  }

  std::size_t select() const {
    std::size_t best = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best == n_ || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && adj_[v].size() > adj_[best].size()))
        best = v;
    }
    return best;
  }

  bool solve(std::size_t colored) {
    if (colored == n_) return true;
    const std::size_t v = select();
    if (saturation_[v] >= k_) return false;
    const int limit = std::min(used_ + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_[v * k_ + c] != 0) continue;
      const int saved_used = used_;
      used_ = std::max(used_, c + 1);
      assign(v, c);
      if (solve(colored + 1)) return true;
      unassign(v);
      used_ = saved_used;
    }
    return false;
  }

  const VisibilityGraph& graph_;
  std::size_t n_;
  int k_;
  int used_ = 0;
  std::vector<int> color_;
  std::vector<int> forbidden_;
  std::vector<int> saturation_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Plain DSATUR greedy coloring; an upper bound on chi.
std::vector<int> dsatur_greedy(const VisibilityGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n + 1, false));
  std::vector<int> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v == n || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] && graph.degree(u) > graph.degree(v)))
        v = u;
    }
    int c = 0;
    while (seen[v][c]) ++c;
    color[v] = c;
    for (std::size_t u = 0; u < n; ++u)
      if (graph.adjacent(u, v) && !seen[u][c]) {
        seen[u][c] = true;
        ++saturation[u];
      }
  }
  return color;
}

}  // namespace

std::vector<std::size_t> large_clique(const VisibilityGraph& graph) {
  if (graph.size() == 0) return {};
  return graph.size() <= 64 ? max_clique_small(graph) : greedy_clique(graph);
}

std::optional<std::vector<int>> k_colorable(const VisibilityGraph& graph, int k) {
  if (k < 1) throw InvalidInput("k_colorable: k must be at least 1");
  if (graph.size() == 0) return std::vector<int>{};
  DsaturSearch search(graph, k);
  return search.run(large_clique(graph));
}

ChromaticResult chromatic_number(const VisibilityGraph& graph) {
  if (graph.size() == 0) throw InvalidInput("chromatic_number: empty graph");
  ChromaticResult result;
  result.clique = large_clique(graph);
  std::vector<int> upper = dsatur_greedy(graph);
  const int upper_chi = *std::max_element(upper.begin(), upper.end()) + 1;
  for (int k = static_cast<int>(result.clique.size()); k < upper_chi; ++k) {
    if (auto coloring = k_colorable(graph, k)) {
      result.chi = k;
      result.witness_coloring = std::move(*coloring);
      return result;
    }
  }
  result.chi = upper_chi;
  result.witness_coloring = std::move(upper);
  return result;
}

}  // namespace visgrab
