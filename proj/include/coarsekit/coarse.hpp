#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coarsekit/centred.hpp"
#include "coarsekit/generators.hpp"
#include "coarsekit/graph.hpp"
#include "coarsekit/independence.hpp"
#include "coarsekit/separators.hpp"
#include "coarsekit/treedecomp.hpp"

namespace coarsekit {

// ---------------------------------------------------------------------------
// Parameters

/// Decimal value of (512 * 20k)^((2k+2)^(2t)). Falls back to the literal power expression
/// "base^exponent" once the decimal would exceed `max_digits` digits.
inline std::string paper_constant_d(std::size_t k, std::size_t t, std::size_t max_digits = 50000) {
  using boost::multiprecision::cpp_int;
  const std::uint64_t base = 512ULL * 20ULL * k;
  const double exponent_f = std::pow(static_cast<double>(2 * k + 2), static_cast<double>(2 * t));
  const double digits = exponent_f * std::log10(static_cast<double>(base));
  if (k == 0) return "0";
  if (!(digits <= static_cast<double>(max_digits))) {
    // Exponent itself as an exact integer when it fits.
    cpp_int e = boost::multiprecision::pow(cpp_int(2 * k + 2), static_cast<unsigned>(2 * t));
    return std::to_string(base) + "^" + e.str();
  }
  const auto exponent = static_cast<unsigned>(std::llround(exponent_f));
  const cpp_int d = boost::multiprecision::pow(cpp_int(base), exponent);
  return d.str();
}

struct ConstructionParams {
  std::size_t k = 1;  // centres per balanced separator
  std::size_t t = 1;  // K_{t,t} parameter (enters only through d)
  /// v joins Z_G iff z_fraction_denominator * alpha(N[v]) >= alpha(G).
  std::uint64_t z_fraction_denominator = 1;
  /// alpha(G) <= this ends the recursion with a single bag.
  std::uint64_t base_alpha_threshold = 4;
  /// X is enlarged up to this independence number.
  std::uint64_t x_alpha_cap = 2;
  /// Thresholds are the proof's own 20k / 20dk / 10dk (saturated to 2^64-1).
  bool paper_thresholds = false;
  std::string paper_d = "1";
  std::vector<std::string> overridden;

  static constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

  /// The proof's constants. 20dk and 10dk exceed 64 bits for every k,t >= 1 and are
  /// stored saturated, so the base case accepts every graph that fits in memory.
  static ConstructionParams paper(std::size_t k, std::size_t t) {
    ConstructionParams p;
    p.k = k;
    p.t = t;
    p.z_fraction_denominator = 20 * k;
    p.base_alpha_threshold = kSaturated;
    p.x_alpha_cap = kSaturated;
    p.paper_thresholds = true;
    p.paper_d = paper_constant_d(k, t);
    p.validate();
    return p;
  }

  /// Small thresholds for experiments; every departure from the proof's values is listed
  /// in `overridden`.
  static ConstructionParams desk(std::size_t k, std::size_t t, std::uint64_t base, std::uint64_t cap,
                                 std::uint64_t z_denominator) {
    ConstructionParams p;
    p.k = k;
    p.t = t;
    p.z_fraction_denominator = z_denominator;
    p.base_alpha_threshold = base;
    p.x_alpha_cap = cap;
    p.paper_d = paper_constant_d(k, t);
    if (z_denominator != 20 * k) p.overridden.push_back("z_fraction_denominator");
    p.overridden.push_back("base_alpha_threshold");
    p.overridden.push_back("x_alpha_cap");
    p.validate();
    return p;
  }

  void validate() const {
    if (k == 0) throw InputError("k must be at least 1");
    if (t == 0) throw InputError("t must be at least 1");
    if (z_fraction_denominator == 0) throw InputError("z_fraction_denominator must be at least 1");
    if (x_alpha_cap > base_alpha_threshold) throw InputError("x_alpha_cap must not exceed base_alpha_threshold");
  }
};

/// Raised when the builder needs a (k,1)-centred balanced separator that does not exist:
/// `host` (an induced subgraph of the input, in input ids) has no ball separator balanced
/// for the indicator of `weighted`. It witnesses that the input violates the hypothesis
/// "every induced subgraph admits (k,1)-balanced separators".
class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(VertexSet host, VertexSet weighted, std::size_t k)
      : std::runtime_error("no (" + std::to_string(k) + ",1)-centred balanced separator for an independent set of size " +
                           std::to_string(weighted.size())),
        host_(std::move(host)),
        weighted_(std::move(weighted)),
        k_(k) {}

  const VertexSet& host() const { return host_; }
  const VertexSet& weighted() const { return weighted_; }
  std::size_t k() const { return k_; }

 private:
  VertexSet host_;
  VertexSet weighted_;
  std::size_t k_;
};

// ---------------------------------------------------------------------------
// Z and the enlargement of X

struct ZSets {
  VertexSet z_graph;  // Z_G
  VertexSet z_x;      // Z_X
  VertexSet all;      // Z_G ∪ Z_X
};

/// Vertices whose closed neighbourhood carries a 1/denominator share of alpha(G)
/// (Z_G) or of alpha(X) (Z_X). Comparisons are exact: denominator * alpha(...) >= alpha(...).
inline ZSets compute_z_parts(const Graph& g, const VertexSet& x, const ConstructionParams& params) {
  g.check_set(x);
  g.require_mask();
  const Mask xm = x.to_mask();
  const std::uint64_t alpha_g = alpha_value(g, g.all_mask());
  const std::uint64_t alpha_x = alpha_value(g, xm);
  const std::uint64_t den = params.z_fraction_denominator;
  std::vector<Vertex> zg, zx;
  for (Vertex v = 0; v < g.n(); ++v) {
    const Mask closed = g.nbr_mask(v) | bit(v);
    if (den * alpha_value(g, closed) >= alpha_g) zg.push_back(v);
    if (den * alpha_value(g, closed & xm) >= alpha_x) zx.push_back(v);
  }
  ZSets z{VertexSet(std::move(zg)), VertexSet(std::move(zx)), {}};
  z.all = z.z_graph | z.z_x;
  return z;
}

inline VertexSet compute_Z(const Graph& g, const VertexSet& x, const ConstructionParams& params) {
  return compute_z_parts(g, x, params).all;
}

/// Grows x until alpha reaches `target`. Vertices are scanned in ascending id and kept when
/// they raise alpha; if a whole pass raises nothing, the smallest absent vertex is added
/// unconditionally and scanning resumes (alpha grows by at most one per vertex, so the
/// target is hit exactly).
inline VertexSet enlarge_X(const Graph& g, const VertexSet& x, std::uint64_t target) {
  g.check_set(x);
  g.require_mask();
  Mask xm = x.to_mask();
  std::uint64_t current = alpha_value(g, xm);
  if (current >= target) return x;
  if (alpha_value(g, g.all_mask()) < target) {
    throw InputError("enlarge_X: alpha(G) is below the target " + std::to_string(target));
  }
  while (current < target) {
    bool raised = false;
    for (Vertex v = 0; v < g.n() && current < target; ++v) {
      if (xm & bit(v)) continue;
      const std::uint64_t with_v = alpha_value(g, xm | bit(v));
      if (with_v > current) {
        xm |= bit(v);
        current = with_v;
        raised = true;
      }
    }
    if (!raised && current < target) {
      const Mask absent = g.all_mask() & ~xm;
      xm |= absent & (~absent + 1);
      current = alpha_value(g, xm);
    }
  }
  return VertexSet::from_mask(xm);
}

// ---------------------------------------------------------------------------
// The recursive construction

/// One recursion step of the builder, in input ids.
struct BuildStep {
  std::size_t depth = 0;
  std::size_t n = 0;
  std::uint64_t alpha_g = 0;
  bool base_case = false;
  std::uint64_t alpha_x = 0;  // after enlargement
  std::size_t z_size = 0;
  std::size_t separator_size = 0;
  std::size_t centres = 0;
  std::size_t components = 0;
  std::size_t guard_trips = 0;
};

struct CentredDecomposition {
  TreeDecomposition decomposition;
  /// Radius-2 certificates in bag-induced mode, one per node.
  std::vector<CentreCertificate> certificates;
  std::size_t realized_k = 0;
  NodeId hub_node = 0;
  VertexSet x;  // the caller's X; the hub bag contains N[X]
  bool guard_tripped = false;
  /// Per node: alpha(X) + |Ŝ| + alpha(Z) for hub nodes built by the recursion, the size of
  /// the certificate the proof writes down for that bag.
  std::vector<std::optional<std::size_t>> accounting_bound;
  std::vector<BuildStep> steps;
};

namespace detail {

struct Piece {
  std::vector<VertexSet> bags;  // input ids
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::optional<std::size_t>> bounds;
  NodeId hub = 0;
};

class CoarseBuilder {
 public:
  CoarseBuilder(const ConstructionParams& params, std::vector<BuildStep>& steps) : params_(params), steps_(steps) {}

  bool guard_tripped = false;

  /// `h` is an induced subgraph of the input; `to_input` maps its ids back.
  Piece build(const Graph& h, const std::vector<Vertex>& to_input, const VertexSet& x_local, std::size_t depth) {
    auto lift = [&](const VertexSet& s) {
      std::vector<Vertex> out;
      for (Vertex v : s) out.push_back(to_input[v]);
      return VertexSet(std::move(out));
    };
    BuildStep step;
    step.depth = depth;
    step.n = h.n();
    const Mask everything = h.all_mask();
    step.alpha_g = alpha_value(h, everything);

    if (step.alpha_g <= params_.base_alpha_threshold) {
      step.base_case = true;
      steps_.push_back(step);
      Piece p;
      p.bags.push_back(lift(VertexSet::from_mask(everything)));
      p.bounds.emplace_back();
      return p;
    }

    const VertexSet x = enlarge_X(h, x_local, params_.x_alpha_cap);
    const Mask xm = x.to_mask();
    step.alpha_x = alpha_value(h, xm);

    const VertexSet z = compute_Z(h, x, params_);
    const Mask zm = z.to_mask();
    step.z_size = z.size();

    // G' = h - Z with its own ids.
    const auto reduced = induced_subgraph(h, VertexSet::from_mask(everything & ~zm));
    const Graph& gp = reduced.graph;
    const VertexSet xp = reduced.restrict(x);
    const VertexSet i_graph = alpha(gp).witness;
    const VertexSet i_x = alpha(gp, xp).witness;

    auto separate = [&](const VertexSet& weighted) {
      auto w = find_centred_balanced_separator(gp, WeightFunction::indicator(gp.n(), weighted), params_.k, 1);
      if (!w) throw HypothesisFailure(lift(reduced.lift(VertexSet::range(static_cast<Vertex>(gp.n())))),
                                      lift(reduced.lift(weighted)), params_.k);
      return *w;
    };
    const SeparatorWitness sep_graph = separate(i_graph);
    const SeparatorWitness sep_x = separate(i_x);
    const VertexSet centres = reduced.lift(sep_graph.centres | sep_x.centres);
    const VertexSet separator = reduced.lift(sep_graph.separator | sep_x.separator);
    const Mask sm = separator.to_mask();
    step.separator_size = separator.size();
    step.centres = centres.size();

    const VertexSet closed_x = ball(h, x, 1);
    Piece out;
    out.bags.push_back(lift(closed_x | separator | z));
    out.bounds.emplace_back(step.alpha_x + centres.size() + alpha_value(h, zm));
    out.hub = 0;

    const auto comps = components(gp, reduced.restrict(separator));
    step.components = comps.size();
    for (const auto& comp_local : comps) {
      const VertexSet comp = reduced.lift(comp_local);
      const Mask cm = comp.to_mask();
      const Mask child_mask = cm | sm | zm;
      const VertexSet child_set = VertexSet::from_mask(child_mask);
      const VertexSet x_child = (VertexSet::from_mask((cm | sm) & xm) | centres) | z;
      const auto child = induced_subgraph(h, child_set);

      // The hub meets this part only inside N_{C'}[X_C].
      const VertexSet inner = child.lift(ball(child.graph, child.restrict(x_child), 1));
      COARSEKIT_ASSERT((closed_x & child_set).is_subset_of(inner), "N_G[X] ∩ V(C') ⊆ N_{C'}[X_C]");

      Piece sub;
      const std::uint64_t alpha_child = alpha_value(h, child_mask);
      if (alpha_child >= step.alpha_g) {
        ++step.guard_trips;
        guard_tripped = true;
        sub.bags.push_back(lift(child_set));
        sub.bounds.emplace_back();
      } else {
        if (params_.paper_thresholds) {
          COARSEKIT_ASSERT(alpha_value(h, x_child.to_mask()) <= params_.x_alpha_cap, "alpha(X_C) <= 10dk");
        }
        std::vector<Vertex> child_to_input;
        for (Vertex v : child.to_host) child_to_input.push_back(to_input[v]);
        sub = build(child.graph, child_to_input, child.restrict(x_child), depth + 1);
        COARSEKIT_ASSERT(lift(inner).is_subset_of(sub.bags[sub.hub]), "child hub bag contains N_{C'}[X_C]");
      }
      const NodeId offset = out.bags.size();
      for (auto& b : sub.bags) out.bags.push_back(std::move(b));
      for (auto& b : sub.bounds) out.bounds.push_back(b);
      for (auto [a, b] : sub.edges) out.edges.emplace_back(a + offset, b + offset);
      out.edges.emplace_back(out.hub, sub.hub + offset);
    }
    steps_.push_back(step);
    return out;
  }

 private:
  const ConstructionParams& params_;
  std::vector<BuildStep>& steps_;
};

}  // namespace detail

/// Builds a tree-decomposition of g with a hub bag containing N[x], following the
/// recursion: base case on small alpha, otherwise remove Z, split G - Z with two
/// (k,1)-centred balanced separators (for a maximum independent set of G - Z and of X - Z),
/// recurse into every component C on C' = G[C ∪ S ∪ Z], and hang each result off a shared
/// hub bag N[X] ∪ S ∪ Z. Every bag then gets a radius-2 certificate measured inside the bag.
///
/// Throws HypothesisFailure when a required separator does not exist and InputError when
/// alpha(x) exceeds params.x_alpha_cap.
inline CentredDecomposition build_coarse_decomposition(const Graph& g, const VertexSet& x,
                                                       const ConstructionParams& params) {
  params.validate();
  require_scale(Guard::kAlpha, g.n());
  g.require_mask();
  g.check_set(x);
  const std::uint64_t alpha_x = alpha_value(g, x.to_mask());
  if (alpha_x > params.x_alpha_cap) {
    throw InputError("alpha(X) = " + std::to_string(alpha_x) + " exceeds x_alpha_cap = " +
                     std::to_string(params.x_alpha_cap));
  }
  CentredDecomposition out;
  out.x = x;
  detail::CoarseBuilder builder(params, out.steps);
  std::vector<Vertex> identity(g.n());
  for (Vertex v = 0; v < g.n(); ++v) identity[v] = v;
  detail::Piece piece;
  if (g.n() == 0) {
    piece.bags.emplace_back();
    piece.bounds.emplace_back();
  } else {
    piece = builder.build(g, identity, x, 0);
  }
  out.decomposition.bags = std::move(piece.bags);
  out.decomposition.edges = std::move(piece.edges);
  out.accounting_bound = std::move(piece.bounds);
  out.hub_node = piece.hub;
  out.guard_tripped = builder.guard_tripped;

  COARSEKIT_ASSERT(validate(g, out.decomposition).empty(), "coarse decomposition validates");
  COARSEKIT_ASSERT(ball(g, x, 1).is_subset_of(out.decomposition.bags[out.hub_node]), "hub bag contains N[X]");
  for (NodeId node = 0; node < out.decomposition.size(); ++node) {
    const VertexSet& bag = out.decomposition.bags[node];
    auto cert = centre_number(g, bag, 2, CentreMode::induced_on(bag));
    if (out.accounting_bound[node]) {
      COARSEKIT_ASSERT(cert.size() <= *out.accounting_bound[node], "hub certificate within the proof's accounting");
    }
    out.realized_k = std::max(out.realized_k, cert.size());
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

// ---------------------------------------------------------------------------
// K_{2k+2}^(2) has no (k,1)-centred balanced separator for its branch vertices

struct ObstructionReport {
  std::size_t k = 0;
  std::size_t n = 0;                      // vertices of K_{2k+2}^(2)
  VertexSet branch_vertices;
  std::uint64_t centre_sets_checked = 0;  // nonempty centre sets of size <= k
  std::uint64_t balanced_found = 0;
  bool branch_pairwise_distance_three = false;
  std::size_t min_surviving_branch = 0;   // min over centre sets of |X \ N[Ŝ]|
  std::uint64_t path_avoidance_failures = 0;
  std::uint64_t split_survivors = 0;      // centre sets leaving X \ S in several components
  std::uint64_t control_centre_sets = 0;  // the same sweep on K_{2k+2} itself
  std::uint64_t control_balanced_found = 0;
  double seconds = 0;

  bool holds() const {
    return balanced_found == 0 && branch_pairwise_distance_three && min_surviving_branch >= k + 2 &&
           path_avoidance_failures == 0 && split_survivors == 0 && control_balanced_found > 0;
  }
};

/// Exhaustive check on K_{2k+2}^(2) with X the branch vertices. The empty centre set is
/// not enumerated: balance is monotone under enlarging the separator, so it cannot
/// succeed where every single ball fails.
inline ObstructionReport verify_lemma_obsk2k(std::size_t k) {
  if (k < 1 || k > 2) throw ScaleError("verify_lemma_obsk2k supports k in {1, 2}");
  const auto start = std::chrono::steady_clock::now();
  ObstructionReport rep;
  rep.k = k;
  const Graph base = gen::complete(2 * k + 2);
  const Subdivision sub = two_subdivision(base);
  const Graph& g = sub.graph;
  rep.n = g.n();
  rep.branch_vertices = sub.branch_vertices;
  const Mask xm = sub.branch_vertices.to_mask();
  const int x_total = popcount(xm);

  rep.branch_pairwise_distance_three = true;
  for (Vertex a : sub.branch_vertices)
    for (Vertex b : sub.branch_vertices)
      if (a < b && distance(g, a, b) != Distance(3)) rep.branch_pairwise_distance_three = false;

  // The two interior vertices of the branch path between a and b.
  auto interior = [&](Vertex a, Vertex b) {
    for (Vertex w1 : g.neighbors(a))
      for (Vertex w2 : g.neighbors(w1))
        if (w2 != a && g.adjacent(w2, b)) return std::pair{w1, w2};
    throw InternalError("no branch path");
  };

  rep.min_surviving_branch = sub.branch_vertices.size();
  const auto pool = detail::members(g.all_mask());
  for (std::size_t size = 1; size <= k; ++size) {
    detail::for_each_combination(pool, size, [&](Mask centres) {
      ++rep.centre_sets_checked;
      const Mask s = ball_mask(g, centres, 1);
      const Mask survivors = xm & ~s;
      rep.min_surviving_branch = std::min<std::size_t>(rep.min_surviving_branch, popcount(survivors));
      for_each_bit(survivors, [&](Vertex a) {
        for_each_bit(survivors, [&](Vertex b) {
          if (a >= b) return;
          auto [w1, w2] = interior(a, b);
          if ((s & (bit(w1) | bit(w2))) != 0) ++rep.path_avoidance_failures;
        });
      });
      int holding = 0;
      bool balanced = true;
      for (Mask c : component_masks(g, g.all_mask() & ~s)) {
        if (c & survivors) ++holding;
        if (2 * popcount(c & xm) > x_total) balanced = false;
      }
      if (holding > 1) ++rep.split_survivors;
      if (balanced) ++rep.balanced_found;
      return false;
    });
  }

  const Mask all = base.all_mask();
  for (std::size_t size = 1; size <= k; ++size) {
    detail::for_each_combination(detail::members(all), size, [&](Mask centres) {
      ++rep.control_centre_sets;
      if (detail::balances(base, all, ball_mask(base, centres, 1), all)) ++rep.control_balanced_found;
      return false;
    });
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Quasi-isometry

/// Positive rational num/den.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational parse(const std::string& text) {
    Rational q;
    std::size_t slash = text.find('/');
    try {
      std::size_t used = 0;
      q.num = std::stoll(text.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? text.size() : slash)) throw InputError("bad rational");
      if (slash != std::string::npos) {
        q.den = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw InputError("bad rational");
      }
    } catch (const std::logic_error&) {
      throw InputError("not a rational number: " + text);
    }
    if (q.num <= 0 || q.den <= 0) throw InputError("q must be a positive rational");
    return q;
  }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct QuasiIsometryViolation {
  enum class Kind { kLowerBound, kUpperBound, kDensity };
  Kind kind;
  Vertex u = 0;  // kDensity: the uncovered vertex of h
  Vertex v = 0;
  Distance dist_g;
  Distance dist_h;
  std::string message;
};

struct QuasiIsometryReport {
  bool ok = true;
  std::uint64_t pair_violations = 0;
  std::uint64_t density_violations = 0;
  /// Largest pair violation (both inequalities measured in units of 1/(num*den)), or the
  /// first density violation when no pair fails.
  std::optional<QuasiIsometryViolation> worst;
};

/// Checks, over all pairs u<v of g,
///   dist_g/q - q <= dist_h(map u, map v) <= q*dist_g + q
/// and that every vertex of h lies within q of the image. Integer cross-multiplication,
/// no floating point; num and den must stay below 2^31.
inline QuasiIsometryReport verify_quasi_isometry(const Graph& g, const Graph& h, const std::vector<Vertex>& map,
                                                 const Rational& q) {
  if (map.size() != g.n()) throw InputError("map must assign an image to every vertex of g");
  for (Vertex img : map) h.check_vertex(img);
  if (q.num <= 0 || q.den <= 0) throw InputError("q must be positive");
  if (q.num >= (std::int64_t{1} << 31) || q.den >= (std::int64_t{1} << 31)) throw InputError("q too large");
  using Wide = __int128;
  const Wide a = q.num, b = q.den;
  QuasiIsometryReport rep;
  const auto dg = all_distances(g);
  const auto dh = all_distances(h);
  bool worst_infinite = false;
  Wide worst_gap = 0;
  auto note = [&](QuasiIsometryViolation viol, bool infinite, Wide gap) {
    ++rep.pair_violations;
    if (worst_infinite) return;
    if (!rep.worst || infinite || gap > worst_gap) {
      rep.worst = std::move(viol);
      worst_infinite = infinite;
      worst_gap = gap;
    }
  };
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const Distance d_g = dg[u][v];
      const Distance d_h = dh[map[u]][map[v]];
      const std::string where = "pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
      // lower: d_g*b^2 - a^2 <= d_h*a*b
      if (!d_g.is_finite() && d_h.is_finite()) {
        note({QuasiIsometryViolation::Kind::kLowerBound, u, v, d_g, d_h, where + ": infinite in g, finite in h"}, true, 0);
      } else if (d_g.is_finite() && d_h.is_finite()) {
        const Wide gap = Wide(d_g.value()) * b * b - a * a - Wide(d_h.value()) * a * b;
        if (gap > 0) {
          std::ostringstream msg;
          msg << where << ": dist_g/q - q > dist_h (dist_g=" << d_g << ", dist_h=" << d_h << ")";
          note({QuasiIsometryViolation::Kind::kLowerBound, u, v, d_g, d_h, msg.str()}, false, gap);
        }
      }
      // upper: d_h*b <= a*(d_g + 1)
      if (d_g.is_finite() && !d_h.is_finite()) {
        note({QuasiIsometryViolation::Kind::kUpperBound, u, v, d_g, d_h, where + ": finite in g, infinite in h"}, true, 0);
      } else if (d_g.is_finite() && d_h.is_finite()) {
        const Wide gap = (Wide(d_h.value()) * b - a * (Wide(d_g.value()) + 1)) * a;
        if (gap > 0) {
          std::ostringstream msg;
          msg << where << ": dist_h > q*dist_g + q (dist_g=" << d_g << ", dist_h=" << d_h << ")";
          note({QuasiIsometryViolation::Kind::kUpperBound, u, v, d_g, d_h, msg.str()}, false, gap);
        }
      }
    }
  }
  for (Vertex y = 0; y < h.n(); ++y) {
    Distance nearest;
    for (Vertex img : map) nearest = std::min(nearest, dh[y][img], [](const Distance& l, const Distance& r) { return l < r; });
    const bool covered = nearest.is_finite() && Wide(nearest.value()) * b <= a;
    if (covered) continue;
    ++rep.density_violations;
    if (!rep.worst) {
      std::ostringstream msg;
      msg << "vertex " << y << " of h is at distance " << nearest << " > q from the image";
      rep.worst = QuasiIsometryViolation{QuasiIsometryViolation::Kind::kDensity, y, y, Distance(), nearest, msg.str()};
    }
  }
  rep.ok = rep.pair_violations == 0 && rep.density_violations == 0;
  return rep;
}

// ---------------------------------------------------------------------------
// Scan over a corpus

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct ScanRow {
  std::string graph;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string admits;               // "true", "false" or "skipped"
  std::string realized_k_r2;        // number, "" when not built, or "hypothesis-failure"/"error"
  std::string max_bag_r1_centres;   // number or ""
  bool guard_tripped = false;
};

inline constexpr const char* kScanHeader = "graph,n,k,admits,realized_k_r2,max_bag_r1_centres,guard_tripped";

/// Per graph: sweep indicator weightings for (k,1)-centred balanced separators; when they
/// all exist, build the radius-2 decomposition (X = ∅) and also record the largest
/// bag-induced radius-1 centre number of its bags. Failures become rows.
inline ScanRow scan_graph(const NamedGraph& item, std::size_t k, const ConstructionParams& params) {
  ScanRow row;
  row.graph = item.name;
  row.n = item.graph.n();
  row.k = k;
  const Graph& g = item.graph;
  try {
    row.admits = admits_kr_balanced_separators_indicator(g, k, 1).admits ? "true" : "false";
  } catch (const ScaleError&) {
    row.admits = "skipped";
    return row;
  }
  if (row.admits != "true") return row;
  try {
    ConstructionParams p = params;
    p.k = k;
    const auto built = build_coarse_decomposition(g, {}, p);
    row.realized_k_r2 = std::to_string(built.realized_k);
    std::size_t r1 = 0;
    for (const auto& bag : built.decomposition.bags)
      r1 = std::max(r1, centre_number(g, bag, 1, CentreMode::induced_on(bag)).size());
    row.max_bag_r1_centres = std::to_string(r1);
    row.guard_tripped = built.guard_tripped;
  } catch (const HypothesisFailure&) {
    row.realized_k_r2 = "hypothesis-failure";
  } catch (const std::exception&) {
    row.realized_k_r2 = "error";
  }
  return row;
}

inline std::vector<ScanRow> conjecture_scan(const std::vector<NamedGraph>& corpus, std::size_t k,
                                            const ConstructionParams& params) {
  std::vector<ScanRow> rows;
  rows.reserve(corpus.size());
  for (const auto& item : corpus) rows.push_back(scan_graph(item, k, params));
  return rows;
}

inline std::string to_csv(const std::vector<ScanRow>& rows) {
  std::string out = std::string(kScanHeader) + "\n";
  for (const auto& r : rows) {
    out += r.graph + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.admits + "," + r.realized_k_r2 +
           "," + r.max_bag_r1_centres + "," + (r.guard_tripped ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace coarsekit
