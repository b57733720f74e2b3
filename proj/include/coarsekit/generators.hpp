#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coarsekit/graph.hpp"

namespace coarsekit::gen {

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

/// C_n for n >= 3; smaller n fall back to the path on n vertices.
inline Graph cycle(std::size_t n) {
  if (n < 3) return path(n);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, e);
}

/// a rows by b columns; vertex (i, j) has id i*b + j.
inline Graph grid(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) {
      Vertex v = static_cast<Vertex>(i * b + j);
      if (j + 1 < b) e.emplace_back(v, v + 1);
      if (i + 1 < a) e.emplace_back(v, static_cast<Vertex>(v + b));
    }
  }
  return Graph(a * b, e);
}

/// K_{s,t}: left side 0..s-1, right side s..s+t-1.
inline Graph complete_bipartite(std::size_t s, std::size_t t) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = 0; v < t; ++v) e.emplace_back(u, static_cast<Vertex>(s + v));
  return Graph(s + t, e);
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// G(n, p). Each pair u<v (lexicographic) is kept iff the next 64-bit draw of
/// mt19937_64(seed) falls below p * 2^64, so the output is a pure function of (n, p, seed).
inline Graph random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t draw = rng();
      if (p >= 1.0 || static_cast<long double>(draw) < scaled) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

/// Random recursive tree: vertex v > 0 attaches to a uniformly drawn earlier vertex.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng() % v), v);
  return Graph(n, e);
}

/// Random cactus on exactly n vertices: blocks are pendant edges or cycles whose length
/// is drawn from `cycle_lengths`, glued at existing vertices. Cacti are series-parallel.
inline Graph random_cactus(std::size_t n, std::uint64_t seed,
                           const std::vector<std::size_t>& cycle_lengths = {3, 5, 6}) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  Vertex used = n > 0 ? 1 : 0;
  while (used < n) {
    Vertex anchor = static_cast<Vertex>(rng() % used);
    std::size_t len = cycle_lengths.empty() ? 0 : cycle_lengths[rng() % cycle_lengths.size()];
    bool as_cycle = len >= 3 && (rng() % 2 == 0) && used + (len - 1) <= n;
    if (!as_cycle) {
      e.emplace_back(anchor, used++);
      continue;
    }
    Vertex prev = anchor;
    for (std::size_t i = 1; i < len; ++i) {
      e.emplace_back(prev, used);
      prev = used++;
    }
    e.emplace_back(prev, anchor);
  }
  return Graph(n, e);
}

/// Random connected graph: a random tree plus G(n,p) edges on top.
inline Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  Graph tree = random_tree(n, seed);
  Graph extra = random(n, p, seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> e = tree.edges();
  for (auto [u, v] : extra.edges())
    if (!tree.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// The labelled graph on n vertices whose edge set is given by `code`: bit i selects the
/// i-th pair in lexicographic order. Used for exhaustive sweeps.
inline Graph from_edge_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> e;
  std::size_t i = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++i)
      if ((code >> i) & 1U) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace coarsekit::gen
