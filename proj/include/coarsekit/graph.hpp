#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coarsekit/errors.hpp"
#include "coarsekit/limits.hpp"

namespace coarsekit {

using Vertex = std::uint32_t;
using Mask = std::uint64_t;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

/// Calls f(v) for every set bit of m, ascending.
template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : ids_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : ids_(std::move(vs)) { normalize(); }

  static VertexSet from_mask(Mask m) {
    VertexSet s;
    for_each_bit(m, [&](Vertex v) { s.ids_.push_back(v); });
    return s;
  }
  static VertexSet range(Vertex n) {
    VertexSet s;
    s.ids_.resize(n);
    for (Vertex v = 0; v < n; ++v) s.ids_[v] = v;
    return s;
  }

  /// Requires every member < 64.
  Mask to_mask() const {
    Mask m = 0;
    for (Vertex v : ids_) {
      if (v >= kMaskLimit) throw ScaleError("vertex id " + std::to_string(v) + " does not fit a mask");
      m |= bit(v);
    }
    return m;
  }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os << '}';
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

/// Shortest-path length, or infinity for vertices in different components.
class Distance {
 public:
  constexpr Distance() = default;  // infinite
  constexpr explicit Distance(std::uint64_t d) : value_(d) {}
  static constexpr Distance infinite() { return Distance(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr std::uint64_t value() const { return value_.value(); }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  /// Finite values order naturally; infinity is larger than every finite value.
  friend constexpr bool operator<(const Distance& a, const Distance& b) {
    if (!a.is_finite()) return false;
    if (!b.is_finite()) return true;
    return a.value() < b.value();
  }
  friend constexpr bool operator<=(const Distance& a, const Distance& b) { return !(b < a); }

  friend std::ostream& operator<<(std::ostream& os, const Distance& d) {
    if (d.is_finite()) return os << d.value();
    return os << "inf";
  }

 private:
  std::optional<std::uint64_t> value_;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, out-of-range endpoints or repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
      }
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw InputError("parallel edge in input");
      }
      m_ += nb.size();
    }
    m_ /= 2;
    if (n <= kMaskLimit) {
      masks_.assign(n, 0);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adj_[v]) masks_[v] |= bit(w);
    }
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges (u,v) with u<v, lexicographic.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool fits_mask() const { return n() <= kMaskLimit; }
  /// Open neighbourhood as a mask; only for graphs with fits_mask().
  Mask nbr_mask(Vertex v) const { return masks_[v]; }
  Mask all_mask() const { return n() >= 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n())) - 1); }
  void require_mask() const {
    if (!fits_mask()) {
      throw ScaleError("graph with n=" + std::to_string(n()) + " exceeds the 64-vertex mask limit");
    }
  }

  void check_vertex(Vertex v) const {
    if (v >= n()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n()));
    }
  }
  void check_set(const VertexSet& s) const {
    if (!s.empty() && s.ids().back() >= n()) check_vertex(s.ids().back());
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Mask> masks_;
  std::size_t m_ = 0;
};

// ---------------------------------------------------------------------------
// Metric operations

/// BFS distances from a set of sources (multi-source).
inline std::vector<Distance> distances_from(const Graph& g, const VertexSet& sources) {
  g.check_set(sources);
  std::vector<Distance> dist(g.n());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist[s] = Distance(0);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w].is_finite()) {
        dist[w] = Distance(dist[v].value() + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return distances_from(g, VertexSet{u})[v];
}

/// All-pairs distances by repeated BFS.
inline std::vector<std::vector<Distance>> all_distances(const Graph& g) {
  std::vector<std::vector<Distance>> d;
  d.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) d.push_back(distances_from(g, VertexSet{v}));
  return d;
}

/// N^r[centres]: every vertex within distance r of some centre.
inline VertexSet ball(const Graph& g, const VertexSet& centres, std::uint64_t r) {
  g.check_set(centres);
  std::vector<Vertex> out;
  std::vector<std::uint64_t> depth(g.n(), std::numeric_limits<std::uint64_t>::max());
  std::deque<Vertex> queue;
  for (Vertex c : centres) {
    depth[c] = 0;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    out.push_back(v);
    if (depth[v] == r) continue;
    for (Vertex w : g.neighbors(v)) {
      if (depth[w] == std::numeric_limits<std::uint64_t>::max()) {
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return VertexSet(std::move(out));
}

/// Mask version of ball() for graphs that fit a mask.
inline Mask ball_mask(const Graph& g, Mask centres, std::uint64_t r) {
  Mask reached = centres;
  Mask frontier = centres;
  for (std::uint64_t step = 0; step < r && frontier != 0; ++step) {
    Mask next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.nbr_mask(v); });
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

/// Connected components of g - removed, each sorted, listed by minimum vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {}) {
  g.check_set(removed);
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

/// Components of g[within] as masks, in order of minimum vertex.
inline std::vector<Mask> component_masks(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask rest = within;
  while (rest != 0) {
    Mask comp = rest & (~rest + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex v) { next |= g.nbr_mask(v); });
      frontier = next & within & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

struct InducedSubgraph {
  Graph graph;
  /// local id -> host id (ascending, so local ids preserve host order)
  std::vector<Vertex> to_host;

  Vertex host(Vertex local) const { return to_host.at(local); }
  VertexSet lift(const VertexSet& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_host.at(v));
    return VertexSet(std::move(out));
  }
  /// Host vertices outside the subgraph are dropped.
  VertexSet restrict(const VertexSet& host_set) const {
    std::vector<Vertex> out;
    for (Vertex h : host_set) {
      auto it = std::lower_bound(to_host.begin(), to_host.end(), h);
      if (it != to_host.end() && *it == h) out.push_back(static_cast<Vertex>(it - to_host.begin()));
    }
    return VertexSet(std::move(out));
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  g.check_set(keep);
  std::vector<Vertex> local(g.n(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] != std::numeric_limits<Vertex>::max()) edges.emplace_back(local[u], local[v]);
  return {Graph(keep.size(), edges), keep.ids()};
}

inline bool anti_complete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  g.check_set(x);
  g.check_set(y);
  if (!(x & y).empty()) return false;
  for (Vertex u : x)
    for (Vertex w : g.neighbors(u))
      if (y.contains(w)) return false;
  return true;
}

struct Subdivision {
  Graph graph;
  /// The original vertices of H, which keep ids 0..n(H)-1.
  VertexSet branch_vertices;
};

/// H^(2): every edge uv becomes the path u - w1 - w2 - v. Subdivision vertices for the
/// i-th edge (lexicographic) get ids n + 2i (next to u) and n + 2i + 1 (next to v).
inline Subdivision two_subdivision(const Graph& h) {
  const auto n = static_cast<Vertex>(h.n());
  std::vector<Edge> edges;
  Vertex next = n;
  for (auto [u, v] : h.edges()) {
    Vertex w1 = next++, w2 = next++;
    edges.emplace_back(u, w1);
    edges.emplace_back(w1, w2);
    edges.emplace_back(w2, v);
  }
  return {Graph(next, edges), VertexSet::range(n)};
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (w > u && s.contains(w)) return false;
  return true;
}

struct BicliqueWitness {
  VertexSet left;
  VertexSet right;
};

struct KttResult {
  bool free = true;
  std::optional<BicliqueWitness> witness;
};

namespace detail {

// Enumerates independent subsets of `pool` of size `need`, ascending lexicographic.
// Stops when f returns true.
template <class F>
bool for_each_independent_subset(const Graph& g, const std::vector<Vertex>& pool, std::size_t need,
                                 std::vector<Vertex>& chosen, std::size_t from, F&& f) {
  if (chosen.size() == need) return f(chosen);
  for (std::size_t i = from; i + (need - chosen.size()) <= pool.size(); ++i) {
    Vertex v = pool[i];
    bool ok = std::none_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(c, v); });
    if (!ok) continue;
    chosen.push_back(v);
    if (for_each_independent_subset(g, pool, need, chosen, i + 1, f)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Exact search for an induced K_{t,t}. Enumerates independent t-sets A (ascending), then
/// looks for an independent t-set inside the common neighbourhood of A. Worst case
/// O(C(n,t)^2 t^2); meant for n up to ~40 and t <= 3.
inline KttResult is_ktt_free(const Graph& g, std::size_t t) {
  if (t == 0) throw InputError("is_ktt_free: t must be >= 1");
  const std::vector<Vertex> all = VertexSet::range(static_cast<Vertex>(g.n())).ids();
  KttResult result;
  std::vector<Vertex> a;
  detail::for_each_independent_subset(g, all, t, a, 0, [&](const std::vector<Vertex>& left) {
    std::vector<Vertex> common;
    for (Vertex v : g.neighbors(left[0])) {
      // Only look at right sides whose minimum exceeds the left minimum, each biclique once.
      if (v < left[0]) continue;
      bool all_adj = std::all_of(left.begin() + 1, left.end(), [&](Vertex u) { return g.adjacent(u, v); });
      if (all_adj) common.push_back(v);
    }
    std::vector<Vertex> b;
    return detail::for_each_independent_subset(g, common, t, b, 0, [&](const std::vector<Vertex>& right) {
      result.free = false;
      result.witness = BicliqueWitness{VertexSet(left), VertexSet(right)};
      return true;
    });
  });
  return result;
}

}  // namespace coarsekit
