#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snarklab/criticality.hpp"
#include "snarklab/edge_set.hpp"
#include "snarklab/errors.hpp"
#include "snarklab/generators.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/hitting.hpp"

namespace snarklab {

// Singletons are kept out of the dense/sparse dichotomy: the definition is
// self-referential for a lone MCS, so a cluster of one is its own kind.
enum class ClusterKind { singleton, dense, densely_sparse, sparse };

inline const char* to_string(ClusterKind k) {
  switch (k) {
    case ClusterKind::singleton: return "singleton";
    case ClusterKind::dense: return "dense";
    case ClusterKind::densely_sparse: return "densely_sparse";
    case ClusterKind::sparse: return "sparse";
  }
  return "unknown";
}

struct Cluster {
  std::vector<std::size_t> members;  // indices into Decomposition::mcs_list
  ClusterKind kind = ClusterKind::singleton;
};

// Connected components of the MCS intersection graph, classified. A cluster
// is dense when all members share a common edge, densely sparse when members
// pairwise intersect without a common edge, and sparse otherwise.
inline std::vector<Cluster> clusters(const Decomposition& decomp) {
  if (!decomp.complete)
    throw contract_error("clusters: decomposition is incomplete");
  const std::vector<EdgeSet>& mcs = decomp.mcs_list;
  std::vector<Cluster> out;
  std::vector<bool> assigned(mcs.size(), false);
  for (std::size_t seed = 0; seed < mcs.size(); ++seed) {
    if (assigned[seed]) continue;
    Cluster cluster;
    std::vector<std::size_t> stack{seed};
    assigned[seed] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      cluster.members.push_back(i);
      for (std::size_t j = 0; j < mcs.size(); ++j)
        if (!assigned[j] && mcs[i].intersects(mcs[j])) {
          assigned[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(cluster.members.begin(), cluster.members.end());

    if (cluster.members.size() == 1) {
      cluster.kind = ClusterKind::singleton;
    } else {
      EdgeSet core = mcs[cluster.members[0]];
      for (std::size_t i : cluster.members) core &= mcs[i];
      if (!core.empty()) {
        cluster.kind = ClusterKind::dense;
      } else {
        bool pairwise = true;
        for (std::size_t a = 0; pairwise && a < cluster.members.size(); ++a)
          for (std::size_t b = a + 1; b < cluster.members.size(); ++b)
            if (!mcs[cluster.members[a]].intersects(mcs[cluster.members[b]])) {
              pairwise = false;
              break;
            }
        cluster.kind =
            pairwise ? ClusterKind::densely_sparse : ClusterKind::sparse;
      }
    }
    out.push_back(std::move(cluster));
  }
  return out;
}

struct OddnessResult {
  std::size_t omega = 0;
  EdgeSet witness_two_factor;
  std::vector<std::vector<Vertex>> odd_components;
};

namespace detail {

// Cycles of a 2-factor, each listed from its smallest vertex walking first
// towards the smaller neighbour; cycles ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> cycle_decomposition(
    const Graph& g, const EdgeSet& two_factor) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> seen(g.n_vertices(), false);
  for (Vertex start = 0; start < g.n_vertices(); ++start) {
    if (seen[start]) continue;
    bool on_factor = false;
    for (auto [w, e] : g.adjacent(start))
      if (two_factor.test(e)) { on_factor = true; break; }
    if (!on_factor) continue;
    std::vector<Vertex> cycle;
    Vertex prev = start, cur = start;
    do {
      seen[cur] = true;
      cycle.push_back(cur);
      Vertex next = cur;
      for (auto [w, e] : g.adjacent(cur)) {
        if (!two_factor.test(e) || w == prev) continue;
        next = w;
        break;
      }
      prev = cur;
      cur = next;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Perfect matchings in canonical order: the lowest unmatched vertex picks
// its incident edges ascending, which yields matchings lexicographic in
// their edge index sequences.
inline void for_each_perfect_matching(
    const Graph& g, std::vector<bool>& matched, EdgeSet& current,
    const std::function<void(const EdgeSet&)>& fn) {
  Vertex u = 0;
  while (u < g.n_vertices() && matched[u]) ++u;
  if (u == g.n_vertices()) {
    fn(current);
    return;
  }
  for (auto [w, e] : g.adjacent(u)) {
    if (w < u || matched[w]) continue;
    matched[u] = matched[w] = true;
    current.set(e);
    for_each_perfect_matching(g, matched, current, fn);
    current.reset(e);
    matched[u] = matched[w] = false;
  }
}

}  // namespace detail

// Minimum number of odd cycles over all 2-factors, realized as complements
// of perfect matchings. The witness is the first minimum in canonical
// matching order.
inline OddnessResult oddness(const Graph& g) {
  if (!g.is_cubic())
    throw contract_error("oddness: graph is not cubic");
  OddnessResult out;
  bool found = false;
  std::vector<bool> matched(g.n_vertices(), false);
  EdgeSet current(g.n_edges());
  detail::for_each_perfect_matching(
      g, matched, current, [&](const EdgeSet& pm) {
        EdgeSet factor = g.full_edge_set() - pm;
        std::size_t odd = 0;
        for (const auto& cycle : detail::cycle_decomposition(g, factor))
          if (cycle.size() % 2) ++odd;
        if (!found || odd < out.omega) {
          found = true;
          out.omega = odd;
          out.witness_two_factor = factor;
        }
      });
  if (!found)
    throw contract_error("oddness: graph has no perfect matching");
  for (auto& cycle :
       detail::cycle_decomposition(g, out.witness_two_factor))
    if (cycle.size() % 2) out.odd_components.push_back(std::move(cycle));
  return out;
}

namespace detail {

inline bool has_hamiltonian_cycle(const Graph& g,
                                  std::optional<Vertex> skip) {
  std::size_t n = g.n_vertices() - (skip ? 1 : 0);
  if (n < 3) return false;
  std::vector<bool> visited(g.n_vertices(), false);
  if (skip) visited[*skip] = true;
  Vertex start = 0;
  while (start < g.n_vertices() && visited[start]) ++start;
  visited[start] = true;
  std::function<bool(Vertex, std::size_t)> extend = [&](Vertex u,
                                                        std::size_t length) {
    if (length == n) {
      for (auto [w, e] : g.adjacent(u))
        if (w == start) return true;
      return false;
    }
    for (auto [w, e] : g.adjacent(u)) {
      if (visited[w]) continue;
      visited[w] = true;
      if (extend(w, length + 1)) return true;
      visited[w] = false;
    }
    return false;
  };
  return extend(start, 1);
}

}  // namespace detail

// No Hamiltonian cycle, yet every single-vertex deletion has one.
inline bool is_hypohamiltonian(const Graph& g) {
  if (detail::has_hamiltonian_cycle(g, std::nullopt)) return false;
  for (Vertex v = 0; v < g.n_vertices(); ++v)
    if (!detail::has_hamiltonian_cycle(g, v)) return false;
  return true;
}

struct ConjectureCheck {
  bool applicable = false;
  bool pass = true;
  std::string certificate;  // populated only on failure
};

struct ConjectureVerdicts {
  ConjectureCheck oddness_bound;                 // omega <= 2r on empty buffer
  ConjectureCheck critical_iff_densely_sparse;   // K_G = E(G) characterization
  ConjectureCheck no_cubic_dense_cluster;
  ConjectureCheck covered_graph_one_sparse_cluster;
  bool all() const {
    return oddness_bound.pass && critical_iff_densely_sparse.pass &&
           no_cubic_dense_cluster.pass &&
           covered_graph_one_sparse_cluster.pass;
  }
};

// Instance checks for the open conjectures and the proved cluster facts.
// A failed proved fact would be refutation-grade and a failed conjecture a
// counterexample candidate, so certificates carry the full numbers.
inline ConjectureVerdicts check_conjectures(const Graph& g,
                                            const Decomposition& decomp,
                                            const ResistanceResult& res) {
  if (!decomp.complete)
    throw contract_error("check_conjectures: decomposition is incomplete");
  ConjectureVerdicts v;
  std::vector<Cluster> cl = clusters(decomp);
  bool bridgeless = scope_bridges(g, g.full_edge_set()).empty();

  if (decomp.b_g.empty() && g.is_cubic() && bridgeless) {
    v.oddness_bound.applicable = true;
    std::size_t omega = oddness(g).omega;
    if (omega > 2 * res.r) {
      v.oddness_bound.pass = false;
      v.oddness_bound.certificate =
          "omega = " + std::to_string(omega) + " exceeds 2r = " +
          std::to_string(2 * res.r);
    }
  }

  if (g.is_cubic() && bridgeless) {
    v.critical_iff_densely_sparse.applicable = true;
    bool critical_everywhere =
        critical_subgraph_via_hitting(decomp) == g.full_edge_set();
    bool densely_sparse_whole =
        res.r == 2 && cl.size() == 1 &&
        cl[0].kind == ClusterKind::densely_sparse;
    if (critical_everywhere != densely_sparse_whole) {
      v.critical_iff_densely_sparse.pass = false;
      v.critical_iff_densely_sparse.certificate =
          std::string("K_G = E(G) is ") +
          (critical_everywhere ? "true" : "false") + " but r = " +
          std::to_string(res.r) + " with " + std::to_string(cl.size()) +
          " cluster(s)";
    }
  }

  for (const Cluster& cluster : cl) {
    EdgeSet scope(g.n_edges());
    for (std::size_t i : cluster.members) scope |= decomp.mcs_list[i];
    std::vector<std::size_t> deg = scope_degrees(g, scope);
    bool cubic_scope = true;
    for (Vertex vtx : scope_vertices(g, scope))
      if (deg[vtx] != 3) { cubic_scope = false; break; }
    if (!cubic_scope) continue;
    v.no_cubic_dense_cluster.applicable = true;
    if (cluster.kind == ClusterKind::dense) {
      v.no_cubic_dense_cluster.pass = false;
      v.no_cubic_dense_cluster.certificate =
          "cluster of " + std::to_string(cluster.members.size()) +
          " MCSs is cubic and dense";
      break;
    }
  }

  if (g.is_cubic() && bridgeless && decomp.m_g == g.full_edge_set()) {
    v.covered_graph_one_sparse_cluster.applicable = true;
    bool one_not_dense = cl.size() == 1 && cl[0].kind != ClusterKind::dense;
    if (!one_not_dense) {
      v.covered_graph_one_sparse_cluster.pass = false;
      v.covered_graph_one_sparse_cluster.certificate =
          "M_G = E(G) but " + std::to_string(cl.size()) +
          " cluster(s), first kind " +
          (cl.empty() ? "none" : to_string(cl[0].kind));
    }
  }

  return v;
}

struct ChainCensus {
  std::size_t n = 0;
  bool complete = true;
  std::size_t mcs_count = 0;
  std::size_t cluster_count = 0;
  ClusterKind kind = ClusterKind::singleton;
  std::size_t r = 0;
  EdgeSet critical;
  bool as_predicted = false;
};

// Build the n-block chain and test the predicted shape: n MCSs in a single
// cluster (singleton, then trivially dense at n = 2, sparse beyond), with
// resistance ceil(n/2) read off the minimum hitting size over the complete
// decomposition.
inline ChainCensus chain_cluster_census(std::size_t n,
                                        std::uint64_t budget = 0) {
  Graph g = chain_cluster(n);
  ColourOracle oracle(g);
  if (budget) oracle.set_budget(budget);
  ChainCensus out;
  out.n = n;
  Decomposition decomp = enumerate_all_mcs(oracle);
  if (!decomp.complete) {
    out.complete = false;
    return out;
  }
  out.mcs_count = decomp.mcs_list.size();
  std::vector<Cluster> cl = clusters(decomp);
  out.cluster_count = cl.size();
  if (!cl.empty()) out.kind = cl[0].kind;
  MinHittingSets mhs = min_hitting_sets(decomp);
  out.r = mhs.size;
  out.critical = EdgeSet(g.n_edges());
  for (const EdgeSet& s : mhs.sets) out.critical |= s;

  ClusterKind predicted_kind = n == 1   ? ClusterKind::singleton
                               : n == 2 ? ClusterKind::dense
                                        : ClusterKind::sparse;
  out.as_predicted = out.mcs_count == n && out.cluster_count == 1 &&
                     out.kind == predicted_kind && out.r == (n + 1) / 2;
  return out;
}

}  // namespace snarklab
