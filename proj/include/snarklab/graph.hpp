#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "snarklab/edge_set.hpp"
#include "snarklab/errors.hpp"

namespace snarklab {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always u < v

// Immutable simple graph. Edge indices are 0..m-1 in lexicographic order of
// the (u, v) pairs; every downstream determinism contract leans on that
// ordering. Deletion is always expressed through EdgeSet masks, never by
// rebuilding, so certificates stay referable to one indexing.
class Graph {
public:
  Graph(std::size_t n_vertices, std::vector<Edge> edges)
      : n_(n_vertices), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
      if (u == v) throw contract_error("self-loop");
      if (u > v) std::swap(u, v);
      if (v >= n_) throw contract_error("vertex index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw contract_error("parallel edge");
    adj_.resize(n_);
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
      adj_[edges_[i].first].push_back({edges_[i].second, i});
      adj_[edges_[i].second].push_back({edges_[i].first, i});
    }
    edge_adj_.resize(edges_.size());
    for (Vertex v = 0; v < n_; ++v)
      for (auto [w1, e1] : adj_[v])
        for (auto [w2, e2] : adj_[v])
          if (e1 != e2) edge_adj_[e1].push_back(e2);
    for (auto& nbrs : edge_adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  std::size_t n_vertices() const { return n_; }
  std::size_t n_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(EdgeIndex i) const { return edges_[i]; }

  // (neighbour, edge index) pairs, sorted by neighbour.
  const std::vector<std::pair<Vertex, EdgeIndex>>& adjacent(Vertex v) const {
    return adj_[v];
  }

  // Edge indices sharing an endpoint with edge i, sorted.
  const std::vector<EdgeIndex>& adjacent_edges(EdgeIndex i) const {
    return edge_adj_[i];
  }

  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool is_subcubic() const { return max_degree() <= 3; }

  bool is_cubic() const {
    for (Vertex v = 0; v < n_; ++v)
      if (degree(v) != 3) return false;
    return n_ > 0;
  }

  EdgeSet full_edge_set() const { return EdgeSet::full(edges_.size()); }

  EdgeSet edges_at(Vertex v) const {
    EdgeSet s(edges_.size());
    for (auto [w, e] : adj_[v]) s.set(e);
    return s;
  }

private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> adj_;
  std::vector<std::vector<EdgeIndex>> edge_adj_;
};

// --- edge-induced subgraph helpers ---------------------------------------
// A subgraph is identified with its EdgeSet; vertices are present iff they
// carry at least one scope edge.

inline std::vector<Vertex> scope_vertices(const Graph& g, const EdgeSet& scope) {
  std::vector<char> seen(g.n_vertices(), 0);
  for (std::size_t i = scope.first(); i < scope.size(); i = scope.next(i)) {
    seen[g.edge(i).first] = 1;
    seen[g.edge(i).second] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

inline std::vector<std::size_t> scope_degrees(const Graph& g,
                                              const EdgeSet& scope) {
  std::vector<std::size_t> deg(g.n_vertices(), 0);
  for (std::size_t i = scope.first(); i < scope.size(); i = scope.next(i)) {
    ++deg[g.edge(i).first];
    ++deg[g.edge(i).second];
  }
  return deg;
}

// Connected components of the edge-induced subgraph, as edge sets, ordered
// by their lowest edge index.
inline std::vector<EdgeSet> scope_components(const Graph& g,
                                             const EdgeSet& scope) {
  std::vector<EdgeSet> out;
  std::vector<char> visited(scope.size(), 0);
  for (std::size_t start = scope.first(); start < scope.size();
       start = scope.next(start)) {
    if (visited[start]) continue;
    EdgeSet comp(scope.size());
    std::vector<EdgeIndex> stack{static_cast<EdgeIndex>(start)};
    visited[start] = 1;
    while (!stack.empty()) {
      EdgeIndex e = stack.back();
      stack.pop_back();
      comp.set(e);
      for (EdgeIndex f : g.adjacent_edges(e))
        if (scope.test(f) && !visited[f]) {
          visited[f] = 1;
          stack.push_back(f);
        }
    }
    out.push_back(comp);
  }
  return out;
}

// Index of edge {u, v}; throws contract_error if absent.
inline EdgeIndex edge_index_of(const Graph& g, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const auto& es = g.edges();
  auto it = std::lower_bound(es.begin(), es.end(), Edge{u, v});
  if (it == es.end() || *it != Edge{u, v})
    throw contract_error("edge_index_of: no such edge");
  return static_cast<EdgeIndex>(it - es.begin());
}

// Edge set of g spanned by a list of vertex pairs.
inline EdgeSet edge_set_of(const Graph& g, const std::vector<Edge>& pairs) {
  EdgeSet out(g.n_edges());
  for (auto [u, v] : pairs) out.set(edge_index_of(g, u, v));
  return out;
}

// Bridges of the edge-induced subgraph (Tarjan low-link).
inline EdgeSet scope_bridges(const Graph& g, const EdgeSet& scope) {
  EdgeSet bridges(scope.size());
  std::vector<int> disc(g.n_vertices(), -1), low(g.n_vertices(), 0);
  int timer = 0;

  struct Frame {
    Vertex v;
    EdgeIndex in_edge;
    std::size_t next;
  };
  for (Vertex root = 0; root < g.n_vertices(); ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, static_cast<EdgeIndex>(-1), 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.adjacent(f.v).size()) {
        auto [w, e] = g.adjacent(f.v)[f.next++];
        if (!scope.test(e) || e == f.in_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[f.v]);
          if (low[f.v] > disc[parent]) bridges.set(f.in_edge);
        }
      }
    }
  }
  return bridges;
}

}  // namespace snarklab
