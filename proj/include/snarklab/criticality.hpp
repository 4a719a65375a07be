#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "snarklab/colouring.hpp"
#include "snarklab/edge_set.hpp"
#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

// The (M_G, C_G, B_G) partition plus the full list of minimal conflicting
// subgraphs. `complete` is false when the enumeration budget ran out; the
// theorem verifiers refuse incomplete decompositions.
struct Decomposition {
  std::vector<EdgeSet> mcs_list;  // canonically sorted
  EdgeSet m_g;                    // union of all MCSs
  EdgeSet c_g;                    // edges off m_g sharing a vertex with it
  EdgeSet b_g;                    // everything else
  bool complete = true;
};

// Reduce a conflicting scope to a minimal conflicting subgraph: walk edges
// in canonical order and delete each one whose removal keeps the scope
// conflicting. One pass reaches the fixed point, because a kept edge stays
// unremovable in every smaller scope (colourability is inherited downward).
inline EdgeSet shrink_to_mcs(ColourOracle& oracle, const EdgeSet& scope) {
  if (!oracle.is_conflicting(scope))
    throw contract_error("shrink_to_mcs: scope is 3-colourable");
  EdgeSet current = scope;
  for (std::size_t e = scope.first(); e < scope.size(); e = scope.next(e)) {
    EdgeSet candidate = current.without(e);
    if (oracle.is_conflicting(candidate)) current = candidate;
  }
  return current;
}

// Grow an MCS containing edge e while avoiding `forbidden`: starting from
// {e}, add every adjacent edge round by round until the scope conflicts,
// then shrink with e protected. Callers must pass a `forbidden` that is the
// rest of a minimal colouring's conflict set, so e is the only conflicting
// edge left and the result is forced to contain it; violations surface as
// contract errors.
inline EdgeSet grow_from_edge(ColourOracle& oracle, EdgeIndex e,
                              const EdgeSet& forbidden) {
  const Graph& g = oracle.graph();
  if (forbidden.test(e))
    throw contract_error("grow_from_edge: e is forbidden");

  EdgeSet scope(g.n_edges());
  scope.set(e);
  while (!oracle.is_conflicting(scope)) {
    EdgeSet next = scope;
    for (Vertex v : scope_vertices(g, scope)) next |= g.edges_at(v);
    next -= forbidden;
    if (next == scope)
      throw contract_error("grow_from_edge: no conflicting supergraph");
    scope = next;
  }

  EdgeSet current = scope;
  for (std::size_t f = scope.first(); f < scope.size(); f = scope.next(f)) {
    if (f == e) continue;
    EdgeSet candidate = current.without(f);
    if (oracle.is_conflicting(candidate)) current = candidate;
  }
  if (oracle.is_conflicting(current.without(e)))
    throw contract_error("grow_from_edge: result not minimal at e");
  return current;
}

namespace detail {

// Enumerate every minimal transversal (inclusion-minimal edge set meeting
// all family members); fn returning false stops the walk. Branches on the
// first uncovered set, excluding already-tried edges downward so each
// transversal is visited once; minimality is confirmed at the leaves.
inline bool for_each_minimal_transversal(
    const std::vector<EdgeSet>& family, std::size_t m,
    const std::function<bool(const EdgeSet&)>& fn) {
  EdgeSet chosen(m);
  EdgeSet banned(m);

  auto covers = [&](const EdgeSet& t) {
    for (const EdgeSet& f : family)
      if (!t.intersects(f)) return false;
    return true;
  };

  auto rec = [&](auto&& self) -> bool {
    const EdgeSet* uncovered = nullptr;
    for (const EdgeSet& f : family)
      if (!chosen.intersects(f)) {
        uncovered = &f;
        break;
      }
    if (!uncovered) {
      for (std::size_t t = chosen.first(); t < m; t = chosen.next(t))
        if (covers(chosen.without(t))) return true;  // not minimal; skip
      return fn(chosen);
    }
    EdgeSet cand = *uncovered - banned;
    std::vector<std::size_t> tried;
    bool keep_going = true;
    for (std::size_t e = cand.first(); e < m && keep_going;
         e = cand.next(e)) {
      chosen.set(e);
      keep_going = self(self);
      chosen.reset(e);
      banned.set(e);
      tried.push_back(e);
    }
    for (std::size_t e : tried) banned.reset(e);
    return keep_going;
  };

  return rec(rec);
}

}  // namespace detail

// Complete MCS enumeration by hitting-set duality: the complement of a
// minimal transversal of the found family is a maximal subset containing no
// found MCS; if every such complement is 3-colourable, the family is
// complete (any unfound MCS would extend to one of them), otherwise a
// conflicting complement shrinks to a genuinely new MCS.
inline Decomposition enumerate_all_mcs(ColourOracle& oracle) {
  const Graph& g = oracle.graph();
  const std::size_t m = g.n_edges();
  Decomposition out{{}, EdgeSet(m), EdgeSet(m), EdgeSet(m), true};

  std::vector<EdgeSet> found;
  try {
    for (;;) {
      bool discovered = false;
      EdgeSet next(m);
      detail::for_each_minimal_transversal(
          found, m, [&](const EdgeSet& t) {
            EdgeSet rest = g.full_edge_set() - t;
            if (!oracle.is_conflicting(rest)) return true;
            next = shrink_to_mcs(oracle, rest);
            discovered = true;
            return false;
          });
      if (!discovered) break;
      found.push_back(next);
    }
  } catch (const budget_exceeded&) {
    out.complete = false;
  }

  std::sort(found.begin(), found.end());
  out.mcs_list = std::move(found);

  for (const EdgeSet& mcs : out.mcs_list) out.m_g |= mcs;
  for (Vertex v : scope_vertices(g, out.m_g)) out.c_g |= g.edges_at(v);
  out.c_g -= out.m_g;
  out.b_g = g.full_edge_set() - out.m_g - out.c_g;
  return out;
}

// The six 3-criticality properties, each independently testable.
struct McsValidation {
  bool minimal = false;
  bool resistance_one = false;
  bool strictly_subcubic = false;
  bool bridgeless = false;
  bool degrees_two_or_three = false;
  bool two_degree3_neighbours = false;

  bool all() const {
    return minimal && resistance_one && strictly_subcubic && bridgeless &&
           degrees_two_or_three && two_degree3_neighbours;
  }
};

inline McsValidation validate_mcs(ColourOracle& oracle, const EdgeSet& mcs) {
  const Graph& g = oracle.graph();
  McsValidation v;

  bool conflicting = oracle.is_conflicting(mcs);
  bool every_deletion_relaxes = true;
  bool some_deletion_relaxes = false;
  for (std::size_t e = mcs.first(); e < mcs.size(); e = mcs.next(e)) {
    if (oracle.is_conflicting(mcs.without(e)))
      every_deletion_relaxes = false;
    else
      some_deletion_relaxes = true;
  }
  v.minimal = conflicting && every_deletion_relaxes;
  v.resistance_one = conflicting && some_deletion_relaxes;

  auto deg = scope_degrees(g, mcs);
  auto vertices = scope_vertices(g, mcs);
  v.strictly_subcubic = false;
  v.degrees_two_or_three = true;
  v.two_degree3_neighbours = true;
  for (Vertex u : vertices) {
    if (deg[u] < 3) v.strictly_subcubic = true;
    if (deg[u] != 2 && deg[u] != 3) v.degrees_two_or_three = false;
    int strong = 0;
    for (auto [w, e] : g.adjacent(u))
      if (mcs.test(e) && deg[w] == 3) ++strong;
    if (strong < 2) v.two_degree3_neighbours = false;
  }

  v.bridgeless = scope_bridges(g, mcs).empty();
  return v;
}

// Edge-disjoint MCSs are necessarily vertex-disjoint. Returns the first
// violating pair, or nullopt when the property holds.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_disjointness_violation(const Graph& g, const Decomposition& decomp) {
  const auto& list = decomp.mcs_list;
  std::vector<std::vector<Vertex>> verts;
  verts.reserve(list.size());
  for (const EdgeSet& mcs : list) verts.push_back(scope_vertices(g, mcs));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (list[i].intersects(list[j])) continue;
      std::vector<Vertex> common;
      std::set_intersection(verts[i].begin(), verts[i].end(),
                            verts[j].begin(), verts[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace snarklab
