#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coarsekit/graph.hpp"

namespace coarsekit::io {

// graph6: N(n) header followed by the upper triangle of the adjacency matrix in column
// order (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each byte offset by 63.

inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

/// Parses one graph6 line (no trailing newline). `line_no` only feeds error messages.
inline Graph parse_graph6(std::string_view text, std::size_t line_no = 1) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", line_no, pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", line_no, pos);
    ++pos;
    return c - 63;
  };
  std::uint64_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = next();
    int digits = 3;
    if (second == 63) {
      digits = 6;
    } else {
      n = static_cast<std::uint64_t>(second);
      digits = 2;
    }
    for (int i = 0; i < digits; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
  }
  std::vector<Edge> edges;
  int acc = 0, left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) edges.emplace_back(i, j);
    }
  }
  if (left > 0 && (acc & ((1 << left) - 1)) != 0) {
    throw ParseError("graph6: nonzero padding bits", line_no, pos - 1);
  }
  if (pos != text.size()) throw ParseError("graph6: trailing bytes", line_no, pos);
  return Graph(n, edges);
}

/// "n m" header then one "u v" line per edge, edges in lexicographic order, LF endings.
inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {

struct LineCursor {
  std::string_view text;
  std::size_t line_no;
  std::size_t base;  // offset of the line within the whole input
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  }
  std::uint64_t number(const char* what) {
    skip_spaces();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError(std::string("expected ") + what, line_no, base + pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
  void finish() {
    skip_spaces();
    if (pos != text.size()) throw ParseError("unexpected trailing text", line_no, base + pos);
  }
};

inline std::vector<std::pair<std::string_view, std::size_t>> split_lines(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start), start);
    start = end + 1;
  }
  return lines;
}

inline bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::size_t idx = 0;
  while (idx < lines.size() && detail::blank(lines[idx].first)) ++idx;
  if (idx == lines.size()) throw ParseError("edge list: missing \"n m\" header", 1, 0);
  detail::LineCursor header{lines[idx].first, idx + 1, lines[idx].second};
  const std::uint64_t n = header.number("vertex count");
  const std::uint64_t m = header.number("edge count");
  header.finish();
  std::vector<Edge> edges;
  for (++idx; idx < lines.size(); ++idx) {
    if (detail::blank(lines[idx].first)) continue;
    detail::LineCursor cur{lines[idx].first, idx + 1, lines[idx].second};
    const std::uint64_t u = cur.number("vertex u");
    const std::uint64_t v = cur.number("vertex v");
    cur.finish();
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", idx + 1, lines[idx].second);
    if (u == v) throw ParseError("self-loop", idx + 1, lines[idx].second);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     1, 0);
  }
  try {
    return Graph(n, edges);
  } catch (const InputError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 1, 0);
  }
}

/// Edge lists start with a decimal digit; graph6 bytes are all >= 63, so the first
/// non-blank character decides the format.
inline bool looks_like_edge_list(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  return true;
}

/// Auto-detects the format. A graph6 input must hold exactly one non-blank line.
inline Graph parse_graph(std::string_view text) {
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  Graph g;
  bool seen = false;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i].first;
    while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::blank(line)) continue;
    if (seen) throw ParseError("graph6: more than one graph in input", i + 1, lines[i].second);
    g = parse_graph6(line, i + 1);
    seen = true;
  }
  return g;
}

/// Every non-blank line as a graph6 graph (corpus files).
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i].first;
    while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!detail::blank(line)) out.push_back(parse_graph6(line, i + 1));
  }
  return out;
}

}  // namespace coarsekit::io
