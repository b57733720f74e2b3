#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "coarsekit/graph.hpp"

namespace coarsekit {

/// Exact nonnegative vertex weights defined on every vertex.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {}

  static WeightFunction zero(std::size_t n) { return WeightFunction(std::vector<std::uint64_t>(n, 0)); }
  static WeightFunction uniform(std::size_t n) { return WeightFunction(std::vector<std::uint64_t>(n, 1)); }
  static WeightFunction indicator(std::size_t n, const VertexSet& x) {
    std::vector<std::uint64_t> w(n, 0);
    for (Vertex v : x) w.at(v) = 1;
    return WeightFunction(std::move(w));
  }

  std::size_t size() const { return weights_.size(); }
  std::uint64_t operator[](Vertex v) const { return weights_.at(v); }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto w : weights_) t += w;
    return t;
  }
  std::uint64_t weight_of(const VertexSet& s) const {
    std::uint64_t t = 0;
    for (Vertex v : s) t += weights_.at(v);
    return t;
  }
  std::uint64_t weight_of(Mask m) const {
    std::uint64_t t = 0;
    for_each_bit(m, [&](Vertex v) { t += weights_[v]; });
    return t;
  }
  const std::vector<std::uint64_t>& values() const { return weights_; }

 private:
  std::vector<std::uint64_t> weights_;
};

struct BalanceResult {
  bool balanced = true;
  std::uint64_t heaviest_component_weight = 0;
  VertexSet heaviest_component;  // first component (by minimum vertex) of maximal weight
  std::uint64_t total_weight = 0;
  std::vector<std::uint64_t> component_weights;  // in components() order
};

/// Every component C of g - s must satisfy 2 * mu(C) <= mu(V(g)); the separator's own
/// weight stays in the total.
inline BalanceResult is_balanced(const Graph& g, const VertexSet& s, const WeightFunction& mu) {
  g.check_set(s);
  if (mu.size() != g.n()) throw InputError("weight function does not cover every vertex");
  BalanceResult r;
  r.total_weight = mu.total();
  for (auto& comp : components(g, s)) {
    const std::uint64_t w = mu.weight_of(comp);
    r.component_weights.push_back(w);
    if (r.component_weights.size() == 1 || w > r.heaviest_component_weight) {
      r.heaviest_component_weight = w;
      r.heaviest_component = comp;
    }
  }
  r.balanced = 2 * r.heaviest_component_weight <= r.total_weight;
  return r;
}

struct SeparatorWitness {
  VertexSet centres;
  std::size_t radius = 0;
  VertexSet separator;  // ball(g, centres, radius)
  std::uint64_t heaviest_component_weight = 0;
  std::uint64_t total_weight = 0;
};

namespace detail {

/// Visits every size-`size` subset of `pool` (ascending ids) in lexicographic order.
/// Stops early when f returns true.
template <class F>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t size, F&& f) {
  if (size > pool.size()) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= bit(pool[i]);
    if (f(m)) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == pool.size() - size + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for_each_bit(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

/// True iff every component of g[within \ sep] carries at most half of `marked`.
inline bool balances(const Graph& g, Mask within, Mask sep, Mask marked) {
  const int total = popcount(marked & within);
  for (Mask c : component_masks(g, within & ~sep))
    if (2 * popcount(c & marked) > total) return false;
  return true;
}

/// Smallest (by size, then lexicographically) S ⊆ within, |S| <= max_size, balancing the
/// indicator of `marked` inside g[within].
inline std::optional<Mask> min_balanced_separator(const Graph& g, Mask within, Mask marked, std::size_t max_size) {
  const auto pool = members(within);
  std::optional<Mask> found;
  for (std::size_t size = 0; size <= max_size && size <= pool.size() && !found; ++size) {
    for_each_combination(pool, size, [&](Mask s) {
      if (!balances(g, within, s, marked)) return false;
      found = s;
      return true;
    });
  }
  return found;
}

/// Candidate centre sets of size <= k in search order, with their balls and the component
/// masks of g minus the ball.
struct CentredCandidate {
  Mask centres;
  Mask ball;
  std::vector<Mask> components;
};

inline std::vector<CentredCandidate> centred_candidates(const Graph& g, std::size_t k, std::size_t r) {
  std::vector<Mask> vertex_ball(g.n());
  for (Vertex v = 0; v < g.n(); ++v) vertex_ball[v] = ball_mask(g, bit(v), r);
  const auto pool = members(g.all_mask());
  std::vector<CentredCandidate> out;
  for (std::size_t size = 0; size <= k && size <= pool.size(); ++size) {
    for_each_combination(pool, size, [&](Mask c) {
      Mask b = 0;
      for_each_bit(c, [&](Vertex v) { b |= vertex_ball[v]; });
      out.push_back({c, b, component_masks(g, g.all_mask() & ~b)});
      return false;
    });
  }
  return out;
}

}  // namespace detail

/// First centre set (by size, then lexicographic) of at most k vertices whose radius-r
/// ball is a balanced separator for mu. Costs O(n^k) balance checks.
inline std::optional<SeparatorWitness> find_centred_balanced_separator(const Graph& g, const WeightFunction& mu,
                                                                       std::size_t k, std::size_t r) {
  g.require_mask();
  if (mu.size() != g.n()) throw InputError("weight function does not cover every vertex");
  std::vector<Mask> vertex_ball(g.n());
  for (Vertex v = 0; v < g.n(); ++v) vertex_ball[v] = ball_mask(g, bit(v), r);
  const std::uint64_t total = mu.total();
  const auto pool = detail::members(g.all_mask());
  std::optional<SeparatorWitness> found;
  for (std::size_t size = 0; size <= k && size <= pool.size() && !found; ++size) {
    detail::for_each_combination(pool, size, [&](Mask centres) {
      Mask b = 0;
      for_each_bit(centres, [&](Vertex v) { b |= vertex_ball[v]; });
      std::uint64_t heaviest = 0;
      for (Mask c : component_masks(g, g.all_mask() & ~b)) {
        heaviest = std::max(heaviest, mu.weight_of(c));
        if (2 * heaviest > total) return false;
      }
      found = SeparatorWitness{VertexSet::from_mask(centres), r, VertexSet::from_mask(b), heaviest, total};
      return true;
    });
  }
  return found;
}

struct IndicatorSweepResult {
  bool admits = true;
  std::optional<VertexSet> failing_set;  // smallest by (size, lexicographic)
  std::uint64_t sets_checked = 0;
};

/// Checks every indicator weighting of g for a (k,r)-centred balanced separator. This
/// stands in for "all weightings": only 0/1 weights are enumerated.
inline IndicatorSweepResult admits_kr_balanced_separators_indicator(const Graph& g, std::size_t k, std::size_t r) {
  require_scale(Guard::kIndicatorSweep, g.n());
  g.require_mask();
  const auto candidates = detail::centred_candidates(g, k, r);
  IndicatorSweepResult result;
  const Mask limit = Mask{1} << g.n();
  std::optional<Mask> worst;
  for (Mask x = 0; x < limit; ++x) {
    ++result.sets_checked;
    const int total = popcount(x);
    const bool ok = std::any_of(candidates.begin(), candidates.end(), [&](const detail::CentredCandidate& c) {
      return std::all_of(c.components.begin(), c.components.end(),
                         [&](Mask comp) { return 2 * popcount(comp & x) <= total; });
    });
    if (ok) continue;
    if (!worst || popcount(x) < popcount(*worst) ||
        (popcount(x) == popcount(*worst) && VertexSet::from_mask(x) < VertexSet::from_mask(*worst))) {
      worst = x;
    }
  }
  if (worst) {
    result.admits = false;
    result.failing_set = VertexSet::from_mask(*worst);
  }
  return result;
}

struct SeparationNumberResult {
  std::size_t value = 0;
  VertexSet hardest_set;       // an indicator set needing `value` separator vertices
  VertexSet hardest_separator; // its smallest balanced separator
};

/// Classical separation number restricted to indicator weightings: the max over X ⊆ V of
/// the smallest arbitrary (not centred) balanced separator for X. Θ(4^n) checks.
inline SeparationNumberResult separation_number_indicator(const Graph& g) {
  require_scale(Guard::kSeparation, g.n());
  g.require_mask();
  const std::size_t n = g.n();
  const Mask limit = Mask{1} << n;
  // Separator candidates ordered by (size, lexicographic) with their component masks.
  std::vector<std::pair<Mask, std::vector<Mask>>> seps;
  const auto pool = detail::members(g.all_mask());
  for (std::size_t size = 0; size <= n; ++size) {
    detail::for_each_combination(pool, size, [&](Mask s) {
      seps.emplace_back(s, component_masks(g, g.all_mask() & ~s));
      return false;
    });
  }
  SeparationNumberResult result;
  for (Mask x = 0; x < limit; ++x) {
    const int total = popcount(x);
    for (const auto& [s, comps] : seps) {
      const bool ok = std::all_of(comps.begin(), comps.end(), [&](Mask c) { return 2 * popcount(c & x) <= total; });
      if (!ok) continue;
      if (static_cast<std::size_t>(popcount(s)) > result.value) {
        result.value = static_cast<std::size_t>(popcount(s));
        result.hardest_set = VertexSet::from_mask(x);
        result.hardest_separator = VertexSet::from_mask(s);
      }
      break;
    }
  }
  return result;
}

}  // namespace coarsekit
