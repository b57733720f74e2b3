#pragma once
// Brute-force reference implementations. They read only n() and edges() from the library
// graph and share no code with the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "coarsekit/graph.hpp"

namespace oracle {

using coarsekit::Graph;
using Set = std::vector<unsigned>;

constexpr unsigned kInf = std::numeric_limits<unsigned>::max();

struct Matrix {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;

  explicit Matrix(const Graph& g) : n(g.n()), adj(g.n(), std::vector<char>(g.n(), 0)) {
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  }
};

inline Set members(std::uint64_t m, std::size_t n) {
  Set out;
  for (unsigned v = 0; v < n; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

/// Floyd-Warshall on the subgraph induced by the vertices flagged in `keep`.
inline std::vector<std::vector<unsigned>> distances(const Matrix& a, const std::vector<char>& keep) {
  const std::size_t n = a.n;
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (keep[j] && a.adj[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::vector<std::vector<unsigned>> distances(const Matrix& a) {
  return distances(a, std::vector<char>(a.n, 1));
}

/// Maximum independent set size by enumerating all 2^n subsets.
inline std::size_t alpha(const Graph& g, std::uint64_t within = ~std::uint64_t{0}) {
  const Matrix a(g);
  const std::size_t n = g.n();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (s & ~within) continue;
    const Set vs = members(s, n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < vs.size(); ++i)
      for (std::size_t j = i + 1; ok && j < vs.size(); ++j) ok = !a.adj[vs[i]][vs[j]];
    if (ok) best = std::max(best, vs.size());
  }
  return best;
}

/// Minimum over all n! elimination orderings of the largest later-neighbourhood.
inline std::size_t treewidth(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  const Matrix base(g);
  std::size_t best = n - 1;
  do {
    auto adj = base.adj;
    std::vector<char> gone(n, 0);
    std::size_t worst = 0;
    for (unsigned v : order) {
      Set later;
      for (unsigned w = 0; w < n; ++w)
        if (!gone[w] && adj[v][w]) later.push_back(w);
      worst = std::max(worst, later.size());
      if (worst >= best) break;
      for (unsigned x : later)
        for (unsigned y : later)
          if (x != y) adj[x][y] = 1;
      gone[v] = 1;
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Components of g - removed, by union-find.
inline std::vector<Set> components(const Graph& g, const std::vector<char>& removed) {
  std::vector<unsigned> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges())
    if (!removed[u] && !removed[v]) parent[find(u)] = find(v);
  std::vector<Set> by_root(g.n());
  for (unsigned v = 0; v < g.n(); ++v)
    if (!removed[v]) by_root[find(v)].push_back(v);
  std::vector<Set> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(c);
  return out;
}

inline bool balanced(const Graph& g, const std::vector<char>& removed, const std::vector<std::uint64_t>& w) {
  const std::uint64_t total = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
  for (const auto& c : components(g, removed)) {
    std::uint64_t cw = 0;
    for (unsigned v : c) cw += w[v];
    if (2 * cw > total) return false;
  }
  return true;
}

/// Calls f on every subset of {0..n-1} with exactly `size` members; stops when f returns true.
template <class F>
bool any_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n) return false;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), 1);
  do {
    Set s;
    for (unsigned i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    if (f(s)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// Whether some set of at most k centres has its radius-r ball balanced for w.
inline bool has_centred_separator(const Graph& g, const std::vector<std::uint64_t>& w, std::size_t k, unsigned r) {
  const Matrix a(g);
  const auto d = distances(a);
  for (std::size_t size = 0; size <= k; ++size) {
    const bool found = any_subset(g.n(), size, [&](const Set& centres) {
      std::vector<char> removed(g.n(), 0);
      for (unsigned c : centres)
        for (unsigned v = 0; v < g.n(); ++v)
          if (d[c][v] <= r) removed[v] = 1;
      return balanced(g, removed, w);
    });
    if (found) return true;
  }
  return false;
}

/// Smallest balanced separator size for the indicator of `marked`.
inline std::size_t min_balanced_separator(const Graph& g, const Set& marked) {
  std::vector<std::uint64_t> w(g.n(), 0);
  for (unsigned v : marked) w[v] = 1;
  for (std::size_t size = 0;; ++size) {
    const bool found = any_subset(g.n(), size, [&](const Set& s) {
      std::vector<char> removed(g.n(), 0);
      for (unsigned v : s) removed[v] = 1;
      return balanced(g, removed, w);
    });
    if (found) return size;
  }
}

/// Minimum number of radius-r balls covering s, distances measured in g[host] when a
/// host set is given and centres drawn from it.
inline std::size_t centre_number(const Graph& g, const Set& s, unsigned r, const std::optional<Set>& host = {}) {
  const Matrix a(g);
  std::vector<char> keep(g.n(), host ? 0 : 1);
  if (host)
    for (unsigned v : *host) keep[v] = 1;
  const auto d = distances(a, keep);
  for (std::size_t size = 0;; ++size) {
    const bool found = any_subset(g.n(), size, [&](const Set& centres) {
      for (unsigned c : centres)
        if (!keep[c]) return false;
      for (unsigned v : s) {
        bool hit = false;
        for (unsigned c : centres) hit = hit || d[c][v] <= r;
        if (!hit) return false;
      }
      return true;
    });
    if (found) return size;
  }
}

/// Independent tree-decomposition check from the definition.
inline bool valid_decomposition(const Graph& g, const std::vector<std::vector<unsigned>>& bags,
                                const std::vector<std::pair<std::size_t, std::size_t>>& tree) {
  const std::size_t nodes = bags.size();
  if (nodes == 0 || tree.size() + 1 != nodes) return false;
  std::vector<std::vector<std::size_t>> t(nodes);
  for (auto [a, b] : tree) {
    if (a >= nodes || b >= nodes) return false;
    t[a].push_back(b);
    t[b].push_back(a);
  }
  auto connected_over = [&](const std::vector<char>& allowed) {
    std::size_t start = nodes, count = 0;
    for (std::size_t i = 0; i < nodes; ++i)
      if (allowed[i]) start = i, ++count;
    if (count == 0) return false;
    std::vector<char> seen(nodes, 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : t[x])
        if (allowed[y] && !seen[y]) seen[y] = 1, ++reached, stack.push_back(y);
    }
    return reached == count;
  };
  if (!connected_over(std::vector<char>(nodes, 1))) return false;
  for (unsigned v = 0; v < g.n(); ++v) {
    std::vector<char> holds(nodes, 0);
    for (std::size_t i = 0; i < nodes; ++i) holds[i] = std::count(bags[i].begin(), bags[i].end(), v) > 0;
    if (!connected_over(holds)) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& b : bags)
      covered = covered || (std::count(b.begin(), b.end(), u) && std::count(b.begin(), b.end(), v));
    if (!covered) return false;
  }
  for (const auto& b : bags)
    for (unsigned v : b)
      if (v >= g.n()) return false;
  return true;
}

}  // namespace oracle
