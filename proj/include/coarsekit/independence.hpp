#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coarsekit/graph.hpp"

namespace coarsekit {

struct AlphaResult {
  std::size_t value = 0;
  /// Lexicographically smallest maximum independent set (as a sorted id sequence).
  VertexSet witness;
};

namespace detail {

/// Greedy clique cover of g[within]; its size bounds alpha from above.
inline std::size_t clique_cover_bound(const Graph& g, Mask within) {
  std::vector<Mask> cliques;
  for_each_bit(within, [&](Vertex v) {
    for (Mask& c : cliques) {
      if ((c & ~g.nbr_mask(v)) == 0) {
        c |= bit(v);
        return;
      }
    }
    cliques.push_back(bit(v));
  });
  return cliques.size();
}

inline std::size_t alpha_search(const Graph& g, Mask within) {
  std::size_t taken = 0;
  // Degree <= 1 vertices belong to some maximum independent set.
  for (bool again = true; again && within != 0;) {
    again = false;
    for (Mask rest = within; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      if (popcount(g.nbr_mask(v) & within) <= 1) {
        ++taken;
        within &= ~(g.nbr_mask(v) | bit(v));
        again = true;
        break;
      }
    }
  }
  if (within == 0) return taken;

  auto comps = component_masks(g, within);
  if (comps.size() > 1) {
    for (Mask c : comps) taken += alpha_search(g, c);
    return taken;
  }

  Vertex pivot = 0;
  int best_deg = -1;
  for_each_bit(within, [&](Vertex v) {
    int d = popcount(g.nbr_mask(v) & within);
    if (d > best_deg) {
      best_deg = d;
      pivot = v;
    }
  });
  // Connected with every degree equal to 2: a cycle.
  if (best_deg == 2) return taken + static_cast<std::size_t>(popcount(within)) / 2;

  const std::size_t with_pivot = 1 + alpha_search(g, within & ~(g.nbr_mask(pivot) | bit(pivot)));
  const Mask without = within & ~bit(pivot);
  std::size_t best = with_pivot;
  if (clique_cover_bound(g, without) > with_pivot) best = std::max(best, alpha_search(g, without));
  return taken + best;
}

}  // namespace detail

/// alpha(g[within]) for a mask-sized graph. No scale check.
inline std::size_t alpha_value(const Graph& g, Mask within) { return detail::alpha_search(g, within); }

/// Lexicographically smallest maximum independent set of g[within].
inline VertexSet alpha_witness(const Graph& g, Mask within, std::size_t value) {
  std::vector<Vertex> chosen;
  Mask candidates = within;
  std::size_t need = value;
  for (Vertex v = 0; v < g.n() && need > 0; ++v) {
    if ((candidates & bit(v)) == 0) continue;
    const Mask above = (v + 1 >= 64) ? 0 : ~(bit(v + 1) - 1);
    const Mask rest = candidates & ~g.nbr_mask(v) & above;
    if (1 + alpha_value(g, rest) == need) {
      chosen.push_back(v);
      --need;
      candidates = rest;
    } else {
      candidates &= ~bit(v);
    }
  }
  COARSEKIT_ASSERT(need == 0, "maximum independent set reconstruction");
  return VertexSet(std::move(chosen));
}

/// Exact independence number of g, or of g[restrict] when given.
inline AlphaResult alpha(const Graph& g, const std::optional<VertexSet>& restrict = std::nullopt) {
  require_scale(Guard::kAlpha, g.n());
  g.require_mask();
  Mask within = g.all_mask();
  if (restrict) {
    g.check_set(*restrict);
    within = restrict->to_mask();
  }
  AlphaResult r;
  r.value = alpha_value(g, within);
  r.witness = alpha_witness(g, within, r.value);
  return r;
}

/// alpha(N[v] ∩ restrict), or alpha(N[v]) without a restriction.
inline std::size_t alpha_of_closed_neighborhood(const Graph& g, Vertex v,
                                                const std::optional<VertexSet>& restrict = std::nullopt) {
  g.check_vertex(v);
  g.require_mask();
  Mask within = g.nbr_mask(v) | bit(v);
  if (restrict) {
    g.check_set(*restrict);
    within &= restrict->to_mask();
  }
  return alpha_value(g, within);
}

}  // namespace coarsekit
