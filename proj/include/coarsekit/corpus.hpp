#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coarsekit/coarse.hpp"
#include "coarsekit/formats.hpp"
#include "coarsekit/generators.hpp"

namespace coarsekit::corpus {

/// Paths, stars, random trees and cycles with at most 14 vertices.
inline std::vector<NamedGraph> trees_and_cycles() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= 14; ++n) out.push_back({"path-" + std::to_string(n), gen::path(n)});
  for (std::size_t leaves = 2; leaves <= 13; leaves += 3) out.push_back({"star-" + std::to_string(leaves), gen::star(leaves)});
  for (std::size_t n = 6; n <= 14; n += 2)
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      out.push_back({"tree-" + std::to_string(n) + "-s" + std::to_string(seed), gen::random_tree(n, seed)});
  for (std::size_t n = 3; n <= 14; ++n) out.push_back({"cycle-" + std::to_string(n), gen::cycle(n)});
  return out;
}

inline std::vector<NamedGraph> builtin(const std::string& name) {
  if (name == "trees-cycles") return trees_and_cycles();
  if (name == "empty") return {};
  throw InputError("unknown builtin corpus " + name + " (known: trees-cycles, empty)");
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Every regular file of `dir` in name order. Edge-list files hold one graph; graph6 files
/// may hold one graph per line, named "file:line-index".
inline std::vector<NamedGraph> load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> out;
  for (const auto& f : files) {
    const std::string text = read_file(f);
    const std::string name = f.filename().string();
    if (io::looks_like_edge_list(text)) {
      out.push_back({name, io::parse_edge_list(text)});
      continue;
    }
    auto graphs = io::parse_graph6_lines(text);
    if (graphs.size() == 1) {
      out.push_back({name, std::move(graphs[0])});
    } else {
      for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back({name + ":" + std::to_string(i), std::move(graphs[i])});
    }
  }
  return out;
}

}  // namespace coarsekit::corpus
