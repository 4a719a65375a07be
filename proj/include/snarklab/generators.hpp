#pragma once

#include <vector>

#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

// Petersen graph: outer C5 on 0..4, spokes i-(5+i), inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, 5 + i});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(e));
}

// Flower snark J_k, odd k >= 5. Hubs A_i = i carry spokes to the outer
// cycle B_i = k+i and to C_i = 2k+i, D_i = 3k+i, which together form one
// 2k-cycle closed by C_{k-1}-D_0 and D_{k-1}-C_0.
inline Graph flower(std::uint32_t k) {
  if (k < 5 || k % 2 == 0)
    throw contract_error("flower: k must be odd and at least 5");
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    e.push_back({i, k + i});
    e.push_back({i, 2 * k + i});
    e.push_back({i, 3 * k + i});
    e.push_back({k + i, k + (i + 1) % k});
  }
  for (Vertex i = 0; i + 1 < k; ++i) {
    e.push_back({2 * k + i, 2 * k + i + 1});
    e.push_back({3 * k + i, 3 * k + i + 1});
  }
  e.push_back({3 * k - 1, 3 * k});
  e.push_back({4 * k - 1, 2 * k});
  return Graph(4 * k, std::move(e));
}

inline Graph k4() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph k33() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex j = 0; j < 3; ++j) e.push_back({i, 3 + j});
  return Graph(6, std::move(e));
}

inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                   {0, 3}, {1, 4}, {2, 5}});
}

namespace detail {

// One chain block at offset 8b: pentagram s0..s4 (labels o..o+4) plus the
// bottom path t0-t1-t2 (labels o+5..o+7) with spokes s2-t0, s3-t1, s4-t2.
// Degree-2 stubs are o+0, o+1 (top) and o+5, o+7 (bottom).
inline std::vector<Edge> chain_block(Vertex b) {
  Vertex o = 8 * b;
  std::vector<Edge> e;
  for (Vertex x = 0; x < 5; ++x) e.push_back({o + x, o + (x + 2) % 5});
  e.push_back({o + 2, o + 5});
  e.push_back({o + 3, o + 6});
  e.push_back({o + 4, o + 7});
  e.push_back({o + 5, o + 6});
  e.push_back({o + 6, o + 7});
  return e;
}

// Vertex pairs joining blocks g and g+1 in chain_cluster(n): the top
// connector runs through the degree-2 midway vertex 8(n+1)+g, the bottom
// connector is a single edge.
inline std::vector<Edge> chain_gap(std::uint32_t n_mcs, std::uint32_t g) {
  Vertex mid = 8 * (n_mcs + 1) + g;
  return {{8 * g + 0, mid}, {mid, 8 * (g + 1) + 1},
          {8 * g + 7, 8 * (g + 1) + 5}};
}

// Vertex pairs of the i-th designed minimal conflicting subgraph of
// chain_cluster(n): blocks i and i+1 plus the three gap-i edges.
inline std::vector<Edge> chain_mcs_pairs(std::uint32_t n_mcs,
                                         std::uint32_t i) {
  std::vector<Edge> e = chain_block(i);
  auto right = chain_block(i + 1);
  e.insert(e.end(), right.begin(), right.end());
  auto gap = chain_gap(n_mcs, i);
  e.insert(e.end(), gap.begin(), gap.end());
  return e;
}

}  // namespace detail

// Chain of n+1 blocks joined by n two-edge connectors; each consecutive
// block pair plus its connector is a minimal conflicting subgraph, so the
// graph has exactly n of them, pairwise overlapping in single blocks.
inline Graph chain_cluster(std::uint32_t n_mcs) {
  if (n_mcs < 1) throw contract_error("chain_cluster: need at least one MCS");
  std::vector<Edge> e;
  for (Vertex b = 0; b <= n_mcs; ++b) {
    auto blk = detail::chain_block(b);
    e.insert(e.end(), blk.begin(), blk.end());
  }
  for (std::uint32_t g = 0; g < n_mcs; ++g) {
    auto gap = detail::chain_gap(n_mcs, g);
    e.insert(e.end(), gap.begin(), gap.end());
  }
  return Graph(8 * (n_mcs + 1u) + n_mcs, std::move(e));
}

inline Graph fixture_example1() { return chain_cluster(4); }

namespace detail {

// Petersen minus a vertex at offset 9g: pentagram p0..p4 plus the outer
// path q0-q1-q2-q3 (labels o+5..o+8) with spokes p_i-q_i for i < 4.
inline std::vector<Edge> gadget9(Vertex g) {
  Vertex o = 9 * g;
  std::vector<Edge> e;
  for (Vertex x = 0; x < 5; ++x) e.push_back({o + x, o + (x + 2) % 5});
  e.push_back({o + 5, o + 6});
  e.push_back({o + 6, o + 7});
  e.push_back({o + 7, o + 8});
  for (Vertex i = 0; i < 4; ++i) e.push_back({o + i, o + 5 + i});
  return e;
}

}  // namespace detail

// Three vertex-disjoint Petersen-minus-a-vertex gadgets wired to a central
// hub (vertex 27) and a gadget-to-gadget ring; cubic, bridgeless, and the
// gadgets are its three minimal conflicting subgraphs.
inline Graph fixture_example2() {
  std::vector<Edge> e;
  for (Vertex g = 0; g < 3; ++g) {
    auto gad = detail::gadget9(g);
    e.insert(e.end(), gad.begin(), gad.end());
    e.push_back({9 * g + 4, 27});
    e.push_back({9 * g + 8, 9 * ((g + 1) % 3) + 5});
  }
  return Graph(28, std::move(e));
}

}  // namespace snarklab
