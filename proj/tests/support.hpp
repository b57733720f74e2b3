#pragma once

#include <vector>

#include "coarsekit/treedecomp.hpp"
#include "oracles.hpp"

namespace testing_support {

inline std::vector<std::vector<unsigned>> bags_of(const coarsekit::TreeDecomposition& td) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& b : td.bags) out.emplace_back(b.begin(), b.end());
  return out;
}

inline bool oracle_valid(const coarsekit::Graph& g, const coarsekit::TreeDecomposition& td) {
  return oracle::valid_decomposition(g, bags_of(td), td.edges);
}

inline oracle::Set ids(const coarsekit::VertexSet& s) { return oracle::Set(s.begin(), s.end()); }

}  // namespace testing_support
