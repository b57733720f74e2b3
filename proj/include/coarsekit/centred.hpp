#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsekit/graph.hpp"

namespace coarsekit {

/// Where distances are measured: in the whole graph, or inside g[host_set] only.
struct CentreMode {
  enum class Kind { kAmbient, kInduced };

  Kind kind = Kind::kAmbient;
  VertexSet host_set;  // only meaningful for kInduced

  static CentreMode ambient() { return {}; }
  static CentreMode induced_on(VertexSet host) { return {Kind::kInduced, std::move(host)}; }

  bool induced() const { return kind == Kind::kInduced; }
  std::string name() const { return induced() ? "induced" : "ambient"; }

  friend bool operator==(const CentreMode&, const CentreMode&) = default;
};

/// Evidence that `covered` lies within distance `radius` of `centres`.
struct CentreCertificate {
  VertexSet centres;
  std::size_t radius = 0;
  CentreMode mode;
  VertexSet covered;

  std::size_t size() const { return centres.size(); }
};

namespace detail {

/// Exact set cover where element e may be covered by any vertex of coverers[e].
class BallCover {
 public:
  BallCover(const Graph& host, Mask universe, std::size_t radius) : universe_(universe) {
    cover_.assign(host.n(), 0);
    coverers_.assign(host.n(), 0);
    for (Vertex v = 0; v < host.n(); ++v) {
      const Mask b = ball_mask(host, bit(v), radius);
      cover_[v] = b & universe;
      if (universe & bit(v)) coverers_[v] = b;  // distances are symmetric
      if (cover_[v] != 0) candidates_ |= bit(v);
    }
  }

  /// Can `todo` be covered by at most `budget` vertices of `allowed`?
  bool feasible(Mask todo, std::size_t budget, Mask allowed) const {
    if (todo == 0) return true;
    if (budget == 0) return false;
    Vertex pick = 0;
    int fewest = 65;
    int widest = 0;
    for_each_bit(todo, [&](Vertex e) {
      int c = popcount(coverers_[e] & allowed);
      if (c < fewest) {
        fewest = c;
        pick = e;
      }
    });
    if (fewest == 0) return false;
    for_each_bit(allowed & candidates_, [&](Vertex c) { widest = std::max(widest, popcount(cover_[c] & todo)); });
    if (static_cast<std::size_t>(widest) * budget < static_cast<std::size_t>(popcount(todo))) return false;
    Mask options = coverers_[pick] & allowed;
    while (options != 0) {
      const auto c = static_cast<Vertex>(std::countr_zero(options));
      options &= options - 1;
      if (feasible(todo & ~cover_[c], budget - 1, allowed)) return true;
      allowed &= ~bit(c);  // every cover using c has been tried
    }
    return false;
  }

  /// Lexicographically smallest cover of exactly `size` vertices, assuming one exists.
  std::vector<Vertex> lex_smallest(std::size_t size) const {
    std::vector<Vertex> chosen;
    Mask todo = universe_;
    Mask allowed = candidates_;
    while (todo != 0) {
      bool placed = false;
      for (Mask rest = allowed; rest != 0; rest &= rest - 1) {
        const auto c = static_cast<Vertex>(std::countr_zero(rest));
        const Mask above = (c + 1 >= 64) ? 0 : ~(bit(c + 1) - 1);
        if ((cover_[c] & todo) == 0) continue;
        if (feasible(todo & ~cover_[c], size - chosen.size() - 1, allowed & above)) {
          chosen.push_back(c);
          todo &= ~cover_[c];
          allowed &= above;
          placed = true;
          break;
        }
      }
      COARSEKIT_ASSERT(placed, "set cover reconstruction");
    }
    return chosen;
  }

  Mask candidates() const { return candidates_; }

 private:
  Mask universe_;
  Mask candidates_ = 0;
  std::vector<Mask> cover_;
  std::vector<Mask> coverers_;
};

struct HostView {
  Graph local;
  std::vector<Vertex> to_host;  // empty for ambient mode (identity)
  Mask universe = 0;

  VertexSet lift(const std::vector<Vertex>& ids) const {
    if (to_host.empty()) return VertexSet(ids);
    std::vector<Vertex> out;
    for (Vertex v : ids) out.push_back(to_host[v]);
    return VertexSet(std::move(out));
  }
};

inline HostView make_host(const Graph& g, const VertexSet& s, const CentreMode& mode) {
  g.check_set(s);
  HostView h;
  if (!mode.induced()) {
    require_scale(Guard::kCentreCover, g.n());
    g.require_mask();
    h.local = g;
    h.universe = s.to_mask();
    return h;
  }
  g.check_set(mode.host_set);
  if (!s.is_subset_of(mode.host_set)) throw InputError("induced-on mode: covered set must lie inside the host set");
  require_scale(Guard::kCentreCover, mode.host_set.size());
  auto sub = induced_subgraph(g, mode.host_set);
  h.universe = sub.restrict(s).to_mask();
  h.local = std::move(sub.graph);
  h.to_host = std::move(sub.to_host);
  return h;
}

}  // namespace detail

/// Minimum number of radius-r balls covering s, with the lexicographically smallest
/// optimal centre set. Centres range over the whole host, not just s.
inline CentreCertificate centre_number(const Graph& g, const VertexSet& s, std::size_t r,
                                       const CentreMode& mode = CentreMode::ambient()) {
  auto host = detail::make_host(g, s, mode);
  detail::BallCover cover(host.local, host.universe, r);
  std::size_t size = 0;
  while (!cover.feasible(host.universe, size, cover.candidates())) ++size;
  return {host.lift(cover.lex_smallest(size)), r, mode, s};
}

/// A certificate with at most k centres if s is (k,r)-centred, otherwise nullopt.
inline std::optional<CentreCertificate> is_centred(const Graph& g, const VertexSet& s, std::size_t k, std::size_t r,
                                                   const CentreMode& mode = CentreMode::ambient()) {
  auto host = detail::make_host(g, s, mode);
  detail::BallCover cover(host.local, host.universe, r);
  for (std::size_t size = 0; size <= k; ++size) {
    if (cover.feasible(host.universe, size, cover.candidates())) {
      return CentreCertificate{host.lift(cover.lex_smallest(size)), r, mode, s};
    }
  }
  return std::nullopt;
}

/// Re-checks a certificate with plain BFS, independently of the cover search.
inline bool validate_certificate(const Graph& g, const CentreCertificate& cert) {
  if (!cert.centres.empty() && cert.centres.ids().back() >= g.n()) return false;
  if (!cert.covered.empty() && cert.covered.ids().back() >= g.n()) return false;
  if (!cert.mode.induced()) return cert.covered.is_subset_of(ball(g, cert.centres, cert.radius));
  const VertexSet& host = cert.mode.host_set;
  if (!cert.centres.is_subset_of(host) || !cert.covered.is_subset_of(host)) return false;
  auto sub = induced_subgraph(g, host);
  return cert.covered.is_subset_of(sub.lift(ball(sub.graph, sub.restrict(cert.centres), cert.radius)));
}

}  // namespace coarsekit
