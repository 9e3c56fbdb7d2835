#include "visgrab/equivalence.hpp"

#include <algorithm>
#include <map>

#include "visgrab/errors.hpp"

namespace visgrab {

namespace {

constexpr std::size_t kMaxPoints = 40;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over a running combination.
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_sorted(std::uint64_t seed, std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  std::uint64_t h = mix(seed, values.size());
  for (auto v : values) h = mix(h, v);
  return h;
}

std::vector<int> class_ids(const ColoredPointSet& set) {
  std::map<int, int> ids;
  std::vector<int> out;
  out.reserve(set.size());
  for (int c : set.colors) {
    auto [it, inserted] = ids.try_emplace(c, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

RelationTable::RelationTable(const ColoredPointSet& set, RelationLevel level)
    : n_(set.size()), level_(level) {
  if (n_ > kMaxPoints)
    throw InvalidInput("relation tables are limited to " + std::to_string(kMaxPoints) + " points");
  const auto& p = set.points;
  mid_.assign(n_ * n_ * n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = j + 1; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (i != j && i != k && strictly_between(p[j], p[k], p[i]))
          mid_[(i * n_ + j) * n_ + k] = mid_[(i * n_ + k) * n_ + j] = 1;
  if (level == RelationLevel::kCollinearity) return;

  tri_.assign(n_ * n_ * n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      for (std::size_t c = b + 1; c < n_; ++c)
        for (std::size_t i = 0; i < n_; ++i) {
          if (i == a || i == b || i == c) continue;
          if (!in_closed_triangle(p[i], p[a], p[b], p[c])) continue;
          const std::size_t perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                                          {b, c, a}, {c, a, b}, {c, b, a}};
          for (const auto& q : perm) tri_[((i * n_ + q[0]) * n_ + q[1]) * n_ + q[2]] = 1;
        }
}

namespace {

std::vector<std::uint64_t> refine_labels(const RelationTable& rel, const std::vector<int>& cls,
                                         const std::vector<std::size_t>& class_size) {
  const std::size_t n = rel.size();
  const bool full = rel.level() == RelationLevel::kHullMembership;
  std::vector<std::uint64_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = mix(1, class_size[cls[i]]);

  // Each round folds in, per relation the point takes part in, its role and the
  // current labels of the other participants. Any number of rounds yields an
  // invariant; extra rounds only separate more non-equivalent points.
  const std::size_t rounds = std::min<std::size_t>(n, 4);
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> facts;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        facts.push_back(mix(mix(10, cls[i] == cls[j]), label[j]));
        for (std::size_t k = j + 1; k < n; ++k) {
          if (k == i) continue;
          if (rel.between(i, j, k))
            facts.push_back(mix_sorted(20, {label[j], label[k]}));
          if (rel.between(j, i, k)) facts.push_back(mix(mix(30, label[j]), label[k]));
          if (rel.between(k, i, j)) facts.push_back(mix(mix(30, label[k]), label[j]));
          if (!full) continue;
          for (std::size_t l = k + 1; l < n; ++l) {
            if (l == i) continue;
            if (rel.in_triangle(i, j, k, l))
              facts.push_back(mix_sorted(40, {label[j], label[k], label[l]}));
            if (rel.in_triangle(j, i, k, l))
              facts.push_back(mix(50, mix(label[j], mix_sorted(0, {label[k], label[l]}))));
            if (rel.in_triangle(k, i, j, l))
              facts.push_back(mix(50, mix(label[k], mix_sorted(0, {label[j], label[l]}))));
            if (rel.in_triangle(l, i, j, k))
              facts.push_back(mix(50, mix(label[l], mix_sorted(0, {label[j], label[k]}))));
          }
        }
      }
      next[i] = mix_sorted(label[i], std::move(facts));
    }
    label = std::move(next);
  }
  return label;
}

}  // namespace

std::vector<std::uint64_t> CombinatorialSignature::canonical_form() const {
  std::vector<std::uint64_t> form{n, betweenness.size(), in_triangle.size(), class_sizes.size()};
  form.insert(form.end(), class_sizes.begin(), class_sizes.end());
  std::vector<std::uint64_t> labels = point_labels;
  std::sort(labels.begin(), labels.end());
  form.insert(form.end(), labels.begin(), labels.end());
  return form;
}

CombinatorialSignature signature(const ColoredPointSet& set, RelationLevel level) {
  const RelationTable rel(set, level);
  const std::size_t n = set.size();
  CombinatorialSignature sig;
  sig.n = n;
  sig.class_of = class_ids(set);
  std::vector<std::size_t> sizes;
  for (int c : sig.class_of) {
    if (static_cast<std::size_t>(c) >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  sig.class_sizes = sizes;
  std::sort(sig.class_sizes.rbegin(), sig.class_sizes.rend());

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (rel.between(i, j, k)) sig.betweenness.push_back({i, j, k});
        if (level != RelationLevel::kHullMembership) continue;
        for (std::size_t l = k + 1; l < n; ++l)
          if (rel.in_triangle(i, j, k, l)) sig.in_triangle.push_back({i, j, k, l});
      }
  sig.point_labels = refine_labels(rel, sig.class_of, sizes);
  return sig;
}

namespace {

class BijectionSearch {
 public:
  BijectionSearch(const ColoredPointSet& x, const ColoredPointSet& y, RelationLevel level)
      : rx_(x, level), ry_(y, level), cx_(class_ids(x)), cy_(class_ids(y)),
        full_(level == RelationLevel::kHullMembership), n_(x.size()) {}

  std::optional<std::vector<std::size_t>> run(const std::vector<std::uint64_t>& lx,
                                              const std::vector<std::uint64_t>& ly) {
    // Map the rarest labels first; they have the fewest candidate images.
    std::map<std::uint64_t, std::size_t> frequency;
    for (auto l : lx) ++frequency[l];
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return frequency[lx[a]] < frequency[lx[b]];
    });
    candidates_.assign(n_, {});
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (lx[i] == ly[j]) candidates_[i].push_back(j);
    phi_.assign(n_, n_);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  bool consistent(std::size_t x, std::size_t y, std::size_t depth) const {
    for (std::size_t s = 0; s < depth; ++s) {
      const std::size_t a = order_[s], fa = phi_[a];
      if ((cx_[x] == cx_[a]) != (cy_[y] == cy_[fa])) return false;
      for (std::size_t t = s + 1; t < depth; ++t) {
        const std::size_t b = order_[t], fb = phi_[b];
        if (rx_.between(x, a, b) != ry_.between(y, fa, fb)) return false;
        if (rx_.between(a, x, b) != ry_.between(fa, y, fb)) return false;
        if (rx_.between(b, x, a) != ry_.between(fb, y, fa)) return false;
        if (!full_) continue;
        for (std::size_t u = t + 1; u < depth; ++u) {
          const std::size_t c = order_[u], fc = phi_[c];
          if (rx_.in_triangle(x, a, b, c) != ry_.in_triangle(y, fa, fb, fc)) return false;
          if (rx_.in_triangle(a, x, b, c) != ry_.in_triangle(fa, y, fb, fc)) return false;
          if (rx_.in_triangle(b, x, a, c) != ry_.in_triangle(fb, y, fa, fc)) return false;
          if (rx_.in_triangle(c, x, a, b) != ry_.in_triangle(fc, y, fa, fb)) return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t x = order_[depth];
    for (std::size_t y : candidates_[x]) {
      if (used_[y] || !consistent(x, y, depth)) continue;
      phi_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      phi_[x] = n_;
    }
    return false;
  }

  RelationTable rx_, ry_;
  std::vector<int> cx_, cy_;
  bool full_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> phi_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> are_equivalent(const ColoredPointSet& x,
                                                       const ColoredPointSet& y,
                                                       RelationLevel level) {
  if (x.size() != y.size()) return std::nullopt;
  const auto sx = signature(x, level);
  const auto sy = signature(y, level);
  if (sx.canonical_form() != sy.canonical_form()) return std::nullopt;
  BijectionSearch search(x, y, level);
  return search.run(sx.point_labels, sy.point_labels);
}

}  // namespace visgrab
