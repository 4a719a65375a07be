#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

namespace detail {

inline unsigned g6_byte(const std::string& s, std::size_t at) {
  if (at >= s.size()) throw parse_error("graph6: truncated input", at);
  unsigned c = static_cast<unsigned char>(s[at]);
  if (c < 63 || c > 126)
    throw parse_error("graph6: byte out of printable range", at);
  return c - 63;
}

}  // namespace detail

// Decode one graph6 string (no surrounding whitespace). Supports the 3-byte
// and 6-byte long vertex-count forms; requires canonical (shortest) headers
// and zero padding bits.
inline Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw parse_error("graph6: empty input", 0);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = detail::g6_byte(text, pos++);
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) != 126) {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | detail::g6_byte(text, pos++);
    if (n < 63) throw parse_error("graph6: non-canonical long header", 0);
  } else {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | detail::g6_byte(text, pos++);
    if (n < 258048)
      throw parse_error("graph6: non-canonical very long header", 0);
  }

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t body_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < body_bytes)
    throw parse_error("graph6: truncated edge data", text.size());
  if (text.size() - pos > body_bytes)
    throw parse_error("graph6: trailing data", pos + body_bytes);

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      unsigned byte = detail::g6_byte(text, pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1u) edges.push_back({u, v});
    }
  }
  for (std::uint64_t pad = bit; pad < body_bytes * 6; ++pad) {
    unsigned byte = detail::g6_byte(text, pos + pad / 6);
    if ((byte >> (5 - pad % 6)) & 1u)
      throw parse_error("graph6: nonzero padding bit", pos + pad / 6);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

// Encode in the shortest canonical form.
inline std::string emit_graph6(const Graph& g) {
  std::string out;
  std::uint64_t n = g.n_vertices();
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  }

  std::vector<char> adj(n * n, 0);
  for (auto [u, v] : g.edges()) adj[u * n + v] = adj[v * n + u] = 1;

  unsigned acc = 0;
  int nbits = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | adj[u * n + v];
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

}  // namespace snarklab
