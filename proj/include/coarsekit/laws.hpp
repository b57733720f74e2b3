#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "coarsekit/formats.hpp"
#include "coarsekit/generators.hpp"
#include "coarsekit/separators.hpp"
#include "coarsekit/treedecomp.hpp"

namespace coarsekit {

struct LawCounterexample {
  Graph graph;
  std::size_t treewidth = 0;
  std::size_t separation = 0;
  std::string law;
};

struct LawSweepReport {
  std::size_t max_n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::optional<LawCounterexample> first_violation;
  double seconds = 0;
};

/// sep <= tw + 1 and tw <= 4 sep (sep over indicator weightings) on every labelled graph
/// with 1..max_n vertices.
inline LawSweepReport law_sweep(std::size_t max_n) {
  if (max_n > 7) throw ScaleError("law_sweep: exhaustive enumeration supports n <= 7");
  const auto start = std::chrono::steady_clock::now();
  LawSweepReport rep;
  rep.max_n = max_n;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = gen::from_edge_code(n, code);
      const std::size_t tw = exact_treewidth(g).value;
      const std::size_t sep = separation_number_indicator(g).value;
      ++rep.graphs;
      const char* broken = nullptr;
      if (sep > tw + 1) broken = "sep <= tw + 1";
      else if (tw > 4 * sep) broken = "tw <= 4 sep";
      if (broken == nullptr) continue;
      ++rep.violations;
      if (!rep.first_violation) rep.first_violation = LawCounterexample{g, tw, sep, broken};
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace coarsekit
