#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsekit/graph.hpp"
#include "coarsekit/separators.hpp"

namespace coarsekit {

using NodeId = std::size_t;

/// A tree on nodes 0..bags.size()-1 with a bag of vertices per node.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<NodeId, NodeId>> edges;

  NodeId add_bag(VertexSet bag) {
    bags.push_back(std::move(bag));
    return bags.size() - 1;
  }
  void connect(NodeId a, NodeId b) { edges.emplace_back(a, b); }
  std::size_t size() const { return bags.size(); }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct Violation {
  enum class Kind { kNotATree, kBadVertex, kVertexMissing, kVertexDisconnected, kEdgeUncovered };
  Kind kind;
  std::string message;
};

inline std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::kNotATree: return "not-a-tree";
    case Violation::Kind::kBadVertex: return "bad-vertex";
    case Violation::Kind::kVertexMissing: return "vertex-missing";
    case Violation::Kind::kVertexDisconnected: return "vertex-disconnected";
    case Violation::Kind::kEdgeUncovered: return "edge-uncovered";
  }
  return "unknown";
}

/// Checks tree-ness, vertex coverage, edge coverage and that each vertex's nodes induce a
/// connected subtree. An empty result means td is a tree-decomposition of g.
inline std::vector<Violation> validate(const Graph& g, const TreeDecomposition& td) {
  std::vector<Violation> out;
  const std::size_t nodes = td.bags.size();
  if (nodes == 0) {
    out.push_back({Violation::Kind::kNotATree, "decomposition has no nodes"});
    return out;
  }
  std::vector<std::vector<NodeId>> tree(nodes);
  bool edges_ok = true;
  for (auto [a, b] : td.edges) {
    if (a >= nodes || b >= nodes || a == b) {
      out.push_back({Violation::Kind::kNotATree,
                     "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid"});
      edges_ok = false;
      continue;
    }
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  if (td.edges.size() != nodes - 1) {
    out.push_back({Violation::Kind::kNotATree, std::to_string(td.edges.size()) + " tree edges for " +
                                                   std::to_string(nodes) + " nodes"});
    edges_ok = false;
  }
  // Node reachability; with nodes-1 edges, connected means acyclic.
  std::vector<char> seen(nodes, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId y : tree[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  if (reached != nodes) {
    out.push_back({Violation::Kind::kNotATree, "tree is disconnected (" + std::to_string(reached) + " of " +
                                                   std::to_string(nodes) + " nodes reachable from node 0)"});
    edges_ok = false;
  }

  std::vector<std::vector<NodeId>> holders(g.n());
  for (NodeId x = 0; x < nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (v >= g.n()) {
        out.push_back({Violation::Kind::kBadVertex,
                       "node " + std::to_string(x) + " holds nonexistent vertex " + std::to_string(v)});
        continue;
      }
      holders[v].push_back(x);
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (holders[v].empty()) {
      out.push_back({Violation::Kind::kVertexMissing, "vertex " + std::to_string(v) + " is in no bag"});
      continue;
    }
    if (!edges_ok) continue;
    std::vector<char> in(nodes, 0), visited(nodes, 0);
    for (NodeId x : holders[v]) in[x] = 1;
    std::vector<NodeId> st{holders[v][0]};
    visited[holders[v][0]] = 1;
    std::size_t count = 0;
    while (!st.empty()) {
      NodeId x = st.back();
      st.pop_back();
      ++count;
      for (NodeId y : tree[x])
        if (in[y] && !visited[y]) {
          visited[y] = 1;
          st.push_back(y);
        }
    }
    if (count != holders[v].size()) {
      out.push_back({Violation::Kind::kVertexDisconnected,
                     "nodes holding vertex " + std::to_string(v) + " do not form a subtree"});
    }
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (NodeId x : holders[u])
      if (td.bags[x].contains(v)) {
        covered = true;
        break;
      }
    if (!covered) {
      out.push_back({Violation::Kind::kEdgeUncovered,
                     "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag"});
    }
  }
  return out;
}

/// Largest bag size minus one (a decomposition whose bags are all empty has width 0).
inline std::size_t width(const TreeDecomposition& td) {
  if (td.bags.empty()) throw InputError("width of an empty decomposition");
  std::size_t biggest = 0;
  for (const auto& b : td.bags) biggest = std::max(biggest, b.size());
  return biggest == 0 ? 0 : biggest - 1;
}

/// Turns an elimination ordering into a tree-decomposition: vertex v gets the bag
/// {v} ∪ (its not-yet-eliminated neighbours in the fill graph) and hangs below the node of
/// the first of those neighbours to be eliminated. Width = max over v of that count.
inline TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.n();
  TreeDecomposition td;
  if (n == 0) {
    td.add_bag({});
    return td;
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) fill[u][v] = fill[v][u] = 1;
  std::vector<NodeId> parent_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w = 0; w < n; ++w)
      if (fill[v][w] && pos[w] > i) later.push_back(w);
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) fill[a][b] = 1;
    std::vector<Vertex> bag = later;
    bag.push_back(v);
    td.add_bag(VertexSet(std::move(bag)));
    std::size_t first = n;
    for (Vertex w : later) first = std::min(first, pos[w]);
    parent_of[i] = first;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) td.connect(i, parent_of[i] == n ? n - 1 : parent_of[i]);
  return td;
}

struct TreewidthResult {
  std::size_t value = 0;
  std::vector<Vertex> elimination_order;
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets:
///   TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)
/// where Q(S, v) is the set of vertices outside S ∪ {v} reachable from v through S.
/// O(2^n n^2) time, 2^n bytes of table.
inline TreewidthResult exact_treewidth(const Graph& g) {
  require_scale(Guard::kTreewidth, g.n());
  g.require_mask();
  const std::size_t n = g.n();
  TreewidthResult result;
  if (n == 0) {
    result.decomposition.add_bag({});
    return result;
  }
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint8_t> tw(full, 0), choice(full, 0);
  auto q_size = [&](Mask s, Vertex v) {
    Mask reach = bit(v), frontier = bit(v), boundary = 0;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex x) { next |= g.nbr_mask(x); });
      boundary |= next & ~s & ~bit(v);
      frontier = next & s & ~reach;
      reach |= frontier;
    }
    return static_cast<std::uint8_t>(popcount(boundary));
  };
  for (std::size_t s = 1; s < full; ++s) {
    std::uint8_t best = 255, arg = 0;
    for_each_bit(static_cast<Mask>(s), [&](Vertex v) {
      const Mask rest = static_cast<Mask>(s) & ~bit(v);
      const std::uint8_t cand = std::max(tw[rest], q_size(rest, v));
      if (cand < best) {
        best = cand;
        arg = static_cast<std::uint8_t>(v);
      }
    });
    tw[s] = best;
    choice[s] = arg;
  }
  result.value = tw[full - 1];
  std::vector<Vertex> reversed;
  for (Mask s = full - 1; s != 0; s &= ~bit(choice[s])) reversed.push_back(choice[s]);
  result.elimination_order.assign(reversed.rbegin(), reversed.rend());
  result.decomposition = decomposition_from_ordering(g, result.elimination_order);
  COARSEKIT_ASSERT(validate(g, result.decomposition).empty(), "exact treewidth witness validates");
  COARSEKIT_ASSERT(width(result.decomposition) == result.value, "exact treewidth witness width");
  return result;
}

struct ClassicBuildResult {
  std::optional<TreeDecomposition> decomposition;
  /// On failure: the tracked set with no balanced separator of the allowed size, and the
  /// vertex set of the part it was searched in.
  std::optional<VertexSet> failing_set;
  std::optional<VertexSet> failing_part;
  std::size_t max_sep_size = 0;
  std::size_t tracked_cap = 0;   // 3k+1
  std::size_t width_bound = 0;   // cap + k - 1 = 4k
  std::size_t separator_calls = 0;
};

/// The separator-driven recursion behind tw <= 4 sep. A part U comes with a tracked
/// set W ⊆ U (its boundary). W is topped up with the smallest vertices of U \ W until it has
/// 3k+1 vertices or covers U, a smallest balanced separator S for the indicator of W is
/// searched inside g[U], W ∪ S becomes a bag, and each component C of g[U] - (W ∪ S)
/// recurses with boundary N(C) ∩ (W ∪ S). Balance puts at most (3k+1)/2 vertices of W next
/// to C, so the boundary never exceeds 3k+1 and every bag has at most 4k+1 vertices.
inline ClassicBuildResult decomposition_from_separator_oracle(const Graph& g, std::size_t max_sep_size) {
  if (max_sep_size == 0) throw InputError("max_sep_size must be at least 1");
  require_scale(Guard::kClassicBuilder, g.n());
  g.require_mask();
  ClassicBuildResult result;
  result.max_sep_size = max_sep_size;
  result.tracked_cap = 3 * max_sep_size + 1;
  result.width_bound = 4 * max_sep_size;
  TreeDecomposition td;
  if (g.n() == 0) {
    td.add_bag({});
    result.decomposition = std::move(td);
    return result;
  }
  bool failed = false;
  auto recurse = [&](auto&& self, Mask part, Mask tracked, std::optional<NodeId> parent) -> void {
    if (failed) return;
    for (Mask rest = part & ~tracked; rest != 0 && static_cast<std::size_t>(popcount(tracked)) < result.tracked_cap;
         rest &= rest - 1) {
      tracked |= rest & (~rest + 1);
    }
    ++result.separator_calls;
    auto sep = detail::min_balanced_separator(g, part, tracked, max_sep_size);
    if (!sep) {
      failed = true;
      result.failing_set = VertexSet::from_mask(tracked);
      result.failing_part = VertexSet::from_mask(part);
      return;
    }
    const Mask bag = tracked | *sep;
    const NodeId node = td.add_bag(VertexSet::from_mask(bag));
    if (parent) td.connect(*parent, node);
    for (Mask comp : component_masks(g, part & ~bag)) {
      Mask nbrs = 0;
      for_each_bit(comp, [&](Vertex v) { nbrs |= g.nbr_mask(v); });
      const Mask boundary = nbrs & bag;
      self(self, comp | boundary, boundary, node);
      if (failed) return;
    }
  };
  recurse(recurse, g.all_mask(), 0, std::nullopt);
  if (failed) return result;
  COARSEKIT_ASSERT(validate(g, td).empty(), "classic decomposition validates");
  COARSEKIT_ASSERT(width(td) <= result.width_bound, "classic decomposition width <= 4k");
  result.decomposition = std::move(td);
  return result;
}

}  // namespace coarsekit
