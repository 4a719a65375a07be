#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

// Parse a whitespace-separated edge list: one "u v" pair per line, '#'
// starts a comment, blank lines are skipped. Vertex labels are the
// nonnegative integers; the graph gets 1 + max(label) vertices. Errors
// report 1-based line numbers.
inline Graph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  Vertex max_label = 0;
  bool any_vertex = false;

  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);

    std::istringstream fields(line);
    std::string tok_u, tok_v, extra;
    if (!(fields >> tok_u)) continue;
    if (!(fields >> tok_v))
      throw parse_error("edge list: expected two vertex labels", lineno);
    if (fields >> extra)
      throw parse_error("edge list: trailing tokens on line", lineno);

    auto to_vertex = [&](const std::string& tok) -> Vertex {
      std::uint64_t value = 0;
      if (tok.empty()) throw parse_error("edge list: empty token", lineno);
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw parse_error("edge list: non-integer vertex label '" + tok +
                                "'",
                            lineno);
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0xffffffffULL)
          throw parse_error("edge list: vertex label too large", lineno);
      }
      return static_cast<Vertex>(value);
    };

    Vertex u = to_vertex(tok_u);
    Vertex v = to_vertex(tok_v);
    if (u == v) throw parse_error("edge list: self-loop", lineno);
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second)
      throw parse_error("edge list: duplicate edge", lineno);
    edges.push_back(e);
    max_label = std::max(max_label, e.second);
    any_vertex = true;
  }

  std::size_t n = any_vertex ? static_cast<std::size_t>(max_label) + 1 : 0;
  return Graph(n, std::move(edges));
}

// Emit one "u v" line per edge in canonical order.
inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace snarklab
