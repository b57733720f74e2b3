#include <gtest/gtest.h>

#include "coarsekit/generators.hpp"
#include "coarsekit/separators.hpp"
#include "coarsekit/treedecomp.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coarsekit;
using testing_support::oracle_valid;

namespace {

TreeDecomposition make(std::vector<VertexSet> bags, std::vector<std::pair<NodeId, NodeId>> edges) {
  TreeDecomposition td;
  td.bags = std::move(bags);
  td.edges = std::move(edges);
  return td;
}

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST(Validate, Examples) {
  const Graph p3 = gen::path(3);
  EXPECT_TRUE(validate(p3, make({{0, 1, 2}}, {})).empty());
  EXPECT_TRUE(validate(p3, make({{0, 1}, {1, 2}}, {{0, 1}})).empty());
  const auto bad = validate(p3, make({{0, 1}, {2}}, {{0, 1}}));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].kind, Violation::Kind::kEdgeUncovered);
  EXPECT_NE(bad[0].message.find("edge 1-2"), std::string::npos);
}

TEST(Validate, EachViolationKind) {
  const Graph p3 = gen::path(3);
  EXPECT_TRUE(has_kind(validate(p3, make({}, {})), Violation::Kind::kNotATree));
  EXPECT_TRUE(has_kind(validate(p3, make({{0, 1, 2}, {0}}, {})), Violation::Kind::kNotATree));
  EXPECT_TRUE(has_kind(validate(p3, make({{0, 1, 2}, {0}, {1}}, {{0, 1}, {1, 0}})), Violation::Kind::kNotATree));
  EXPECT_TRUE(has_kind(validate(p3, make({{0, 1, 2, 7}}, {})), Violation::Kind::kBadVertex));
  EXPECT_TRUE(has_kind(validate(p3, make({{0, 1}}, {})), Violation::Kind::kVertexMissing));
  EXPECT_TRUE(
      has_kind(validate(p3, make({{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}})), Violation::Kind::kVertexDisconnected));
}

TEST(Validate, AgreesWithIndependentCheck) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen::random(6, 0.4, seed);
    // Random bag systems on a random tree shape.
    std::mt19937_64 rng(seed);
    const std::size_t nodes = 1 + rng() % 4;
    TreeDecomposition td;
    for (std::size_t i = 0; i < nodes; ++i) td.add_bag(VertexSet::from_mask(rng() & g.all_mask()));
    for (std::size_t i = 1; i < nodes; ++i) td.connect(rng() % i, i);
    EXPECT_EQ(validate(g, td).empty(), oracle_valid(g, td)) << seed;
  }
}

TEST(Width, Examples) {
  EXPECT_EQ(width(make({{0, 1, 2, 3}}, {})), 3u);
  EXPECT_EQ(width(make({{0, 1}, {1, 2}}, {{0, 1}})), 1u);
  EXPECT_EQ(width(make({{0, 1}, {1, 2, 3}, {3, 4}}, {{0, 1}, {1, 2}})), 2u);
  EXPECT_EQ(width(make({{}}, {})), 0u);
  EXPECT_THROW(width(make({}, {})), InputError);
}

TEST(ExactTreewidth, KnownValues) {
  for (std::size_t n = 2; n <= 20; n += 6) EXPECT_EQ(exact_treewidth(gen::random_tree(n, n)).value, 1u);
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(exact_treewidth(gen::cycle(n)).value, 2u);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(exact_treewidth(gen::complete(n)).value, n - 1);
  EXPECT_EQ(exact_treewidth(gen::grid(3, 3)).value, 3u);
  EXPECT_EQ(exact_treewidth(gen::grid(4, 4)).value, 4u);
  EXPECT_EQ(exact_treewidth(gen::complete_bipartite(3, 4)).value, 3u);
  EXPECT_EQ(exact_treewidth(Graph(5, {})).value, 0u);
  EXPECT_EQ(oracle::treewidth(gen::grid(3, 3)), 3u);
}

TEST(ExactTreewidth, MatchesEliminationOrderBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen::random(3 + seed % 6, 0.2 + 0.1 * (seed % 5), seed);
    const auto r = exact_treewidth(g);
    ASSERT_EQ(r.value, oracle::treewidth(g)) << seed;
    EXPECT_TRUE(oracle_valid(g, r.decomposition));
    EXPECT_EQ(width(r.decomposition), r.value);
  }
}

TEST(ExactTreewidth, ScaleGuard) {
  EXPECT_THROW(exact_treewidth(gen::path(21)), ScaleError);
}

TEST(DecompositionFromOrdering, AnyOrderGivesValidDecomposition) {
  const Graph g = gen::grid(3, 4);
  std::vector<Vertex> order(12);
  std::iota(order.begin(), order.end(), 0u);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(order.begin(), order.end(), std::mt19937_64(trial));
    EXPECT_TRUE(validate(g, decomposition_from_ordering(g, order)).empty());
  }
}

TEST(ClassicBuilder, Examples) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto r = decomposition_from_separator_oracle(gen::path(n), 1);
    ASSERT_TRUE(r.decomposition) << n;
    EXPECT_TRUE(oracle_valid(gen::path(n), *r.decomposition));
    EXPECT_LE(width(*r.decomposition), 3u);
    EXPECT_EQ(r.width_bound, 4u);
    EXPECT_EQ(r.tracked_cap, 4u);
  }
  const auto k5 = decomposition_from_separator_oracle(gen::complete(5), 2);
  EXPECT_FALSE(k5.decomposition);
  ASSERT_TRUE(k5.failing_set);
  EXPECT_EQ(*k5.failing_set, VertexSet::range(5));
  EXPECT_EQ(oracle::min_balanced_separator(gen::complete(5), {0, 1, 2, 3, 4}), 3u);

  const auto k1 = decomposition_from_separator_oracle(gen::complete(1), 1);
  ASSERT_TRUE(k1.decomposition);
  EXPECT_EQ(k1.decomposition->size(), 1u);
  EXPECT_THROW(decomposition_from_separator_oracle(gen::path(3), 0), InputError);
}

TEST(ClassicBuilder, SucceedsAtSeparationNumber) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = gen::random_connected(9, 0.3, seed);
    const std::size_t sep = separation_number_indicator(g).value;
    const auto r = decomposition_from_separator_oracle(g, sep);
    ASSERT_TRUE(r.decomposition) << seed;
    EXPECT_TRUE(oracle_valid(g, *r.decomposition));
    EXPECT_LE(width(*r.decomposition), 4 * sep);
    EXPECT_GE(width(*r.decomposition), exact_treewidth(g).value);
  }
}

TEST(ClassicBuilder, FailureWitnessHasNoSmallSeparator) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen::random_connected(8, 0.6, seed);
    const auto r = decomposition_from_separator_oracle(g, 1);
    if (r.decomposition) continue;
    const auto part = induced_subgraph(g, *r.failing_part);
    std::vector<unsigned> marked;
    for (Vertex v : part.restrict(*r.failing_set)) marked.push_back(v);
    EXPECT_GT(oracle::min_balanced_separator(part.graph, marked), 1u);
  }
}
