#include <catch2/catch_amalgamated.hpp>

#include "snarklab/generators.hpp"
#include "snarklab/graph.hpp"

using namespace snarklab;

TEST_CASE("Graph canonicalizes edges and validates input") {
  Graph g(4, {{2, 0}, {0, 1}, {3, 1}});
  REQUIRE(g.n_vertices() == 4);
  REQUIRE(g.n_edges() == 3);
  REQUIRE(g.edge(0) == Edge{0, 1});
  REQUIRE(g.edge(1) == Edge{0, 2});
  REQUIRE(g.edge(2) == Edge{1, 3});

  REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), contract_error);
  REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), contract_error);
  REQUIRE_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), contract_error);
}

TEST_CASE("Graph adjacency and degrees") {
  Graph p = petersen();
  REQUIRE(p.is_cubic());
  REQUIRE(p.is_subcubic());
  REQUIRE(p.max_degree() == 3);
  for (Vertex v = 0; v < 10; ++v) REQUIRE(p.degree(v) == 3);

  // Edge adjacency: each edge of a cubic graph touches 4 others.
  for (EdgeIndex e = 0; e < p.n_edges(); ++e)
    REQUIRE(p.adjacent_edges(e).size() == 4);

  EdgeSet at0 = p.edges_at(0);
  REQUIRE(at0.count() == 3);
  for (std::size_t e = at0.first(); e < at0.size(); e = at0.next(e)) {
    auto [u, v] = p.edge(static_cast<EdgeIndex>(e));
    REQUIRE((u == 0 || v == 0));
  }

  REQUIRE(edge_index_of(p, 1, 0) == 0);
  REQUIRE_THROWS_AS(edge_index_of(p, 0, 3), contract_error);
}

TEST_CASE("scope helpers work on edge-induced subgraphs") {
  Graph p = petersen();
  EdgeSet all = p.full_edge_set();

  auto comps = scope_components(p, all);
  REQUIRE(comps.size() == 1);
  REQUIRE(comps[0] == all);
  REQUIRE(scope_bridges(p, all).empty());

  // Outer cycle only: one component, no bridges, all degrees 2.
  EdgeSet outer(p.n_edges());
  for (Vertex i = 0; i < 5; ++i)
    outer.set(edge_index_of(p, i, (i + 1) % 5));
  REQUIRE(scope_components(p, outer).size() == 1);
  REQUIRE(scope_bridges(p, outer).empty());
  auto deg = scope_degrees(p, outer);
  REQUIRE(scope_vertices(p, outer).size() == 5);
  for (Vertex v = 0; v < 5; ++v) REQUIRE(deg[v] == 2);
  for (Vertex v = 5; v < 10; ++v) REQUIRE(deg[v] == 0);

  // A path has every edge as a bridge.
  EdgeSet path(p.n_edges());
  path.set(edge_index_of(p, 0, 1));
  path.set(edge_index_of(p, 1, 2));
  REQUIRE(scope_bridges(p, path) == path);

  // Two disjoint pieces come back ordered by lowest edge index.
  EdgeSet two = outer;
  EdgeSet inner(p.n_edges());
  for (Vertex i = 0; i < 5; ++i)
    inner.set(edge_index_of(p, 5 + i, 5 + (i + 2) % 5));
  two |= inner;
  auto pieces = scope_components(p, two);
  REQUIRE(pieces.size() == 2);
  REQUIRE(pieces[0] == outer);
  REQUIRE(pieces[1] == inner);
}
