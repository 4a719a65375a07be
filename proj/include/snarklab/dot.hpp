#pragma once

#include <string>

#include "snarklab/edge_set.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Annotated rendering of the decomposition, echoing the thick-edge figures:
// every edge of M_G is bold and the critical edges of K_G are additionally
// coloured; conflict-cut edges are dashed and buffer edges gray.
inline std::string render_dot(const Graph& g, const std::string& name,
                              const EdgeSet& m_g, const EdgeSet& c_g,
                              const EdgeSet& k_g) {
  std::string out = "graph \"" + detail::dot_escape(name) + "\" {\n";
  out += "  node [shape=circle fontsize=10 width=0.3 fixedsize=true];\n";
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (EdgeIndex e = 0; e < g.n_edges(); ++e) {
    auto [u, v] = g.edge(e);
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    if (k_g.test(e))
      out += " [penwidth=2 color=crimson]";
    else if (m_g.test(e))
      out += " [penwidth=2]";
    else if (c_g.test(e))
      out += " [style=dashed]";
    else
      out += " [color=gray]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace snarklab
