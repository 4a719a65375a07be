#pragma once

// Shared helpers for unit and acceptance tests: brute-force reference
// implementations that deliberately avoid the library's search strategies.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "snarklab/colouring.hpp"
#include "snarklab/generators.hpp"
#include "snarklab/graph.hpp"

namespace snarklab::testing {

// Petersen with one vertex's edges removed, as a host graph.
inline Graph petersen_minus_vertex(Vertex v) {
  Graph p = petersen();
  std::vector<Edge> edges;
  for (auto [a, b] : p.edges())
    if (a != v && b != v) edges.push_back({a, b});
  return Graph(10, std::move(edges));
}

// Every minimal conflicting subgraph by exhaustive subset scan. Only
// sensible for hosts with at most ~18 edges.
inline std::vector<EdgeSet> brute_enumerate_mcs(ColourOracle& oracle) {
  const Graph& g = oracle.graph();
  const std::size_t m = g.n_edges();
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    EdgeSet scope(m);
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) scope.set(i);
    if (!oracle.is_conflicting(scope)) continue;
    bool minimal = true;
    for (std::size_t e = scope.first(); e < m && minimal; e = scope.next(e))
      if (oracle.is_conflicting(scope.without(e))) minimal = false;
    if (minimal) out.push_back(scope);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum hitting sets by plain subset enumeration over increasing sizes.
inline std::pair<std::size_t, std::vector<EdgeSet>> brute_min_hitting(
    const std::vector<EdgeSet>& family, std::size_t m) {
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<EdgeSet> found;
    EdgeSet picked(m);
    auto sweep = [&](auto&& self, std::size_t left, std::size_t next) -> void {
      if (left == 0) {
        for (const EdgeSet& s : family)
          if (!s.intersects(picked)) return;
        found.push_back(picked);
        return;
      }
      for (std::size_t e = next; e + left <= m; ++e) {
        picked.set(e);
        self(self, left - 1, e + 1);
        picked.reset(e);
      }
    };
    sweep(sweep, k, 0);
    if (!found.empty()) return {k, found};
  }
  return {m + 1, {}};
}

}  // namespace snarklab::testing
