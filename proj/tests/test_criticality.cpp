#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "snarklab/criticality.hpp"
#include "snarklab/generators.hpp"
#include "support.hpp"

using namespace snarklab;

TEST_CASE("shrink_to_mcs on petersen") {
  Graph p = petersen();
  ColourOracle oracle(p);

  EdgeSet mcs = shrink_to_mcs(oracle, p.full_edge_set());
  REQUIRE(mcs.count() == 12);
  REQUIRE(scope_vertices(p, mcs).size() == 9);
  REQUIRE(validate_mcs(oracle, mcs).all());

  // Fixed point and determinism.
  REQUIRE(shrink_to_mcs(oracle, mcs) == mcs);
  REQUIRE(shrink_to_mcs(oracle, p.full_edge_set()) == mcs);

  // Colourable scope is a contract violation.
  REQUIRE_THROWS_AS(shrink_to_mcs(oracle, mcs.without(mcs.first())),
                    contract_error);
}

TEST_CASE("enumerate_all_mcs matches brute force on small hosts") {
  // Petersen: the ten vertex-deleted subgraphs.
  {
    Graph p = petersen();
    ColourOracle oracle(p);
    Decomposition d = enumerate_all_mcs(oracle);
    REQUIRE(d.complete);
    REQUIRE(d.mcs_list.size() == 10);
    for (const EdgeSet& mcs : d.mcs_list) {
      REQUIRE(mcs.count() == 12);
      REQUIRE(validate_mcs(oracle, mcs).all());
    }
    REQUIRE(d.mcs_list == testing::brute_enumerate_mcs(oracle));
    REQUIRE(d.m_g == p.full_edge_set());
    REQUIRE(d.c_g.empty());
    REQUIRE(d.b_g.empty());
    REQUIRE_FALSE(find_disjointness_violation(p, d).has_value());
  }

  // Petersen minus a vertex: a 3-critical host is its own single MCS.
  {
    Graph h = testing::petersen_minus_vertex(0);
    ColourOracle oracle(h);
    Decomposition d = enumerate_all_mcs(oracle);
    REQUIRE(d.mcs_list.size() == 1);
    REQUIRE(d.mcs_list[0] == h.full_edge_set());
    REQUIRE(d.mcs_list == testing::brute_enumerate_mcs(oracle));
  }

  // Petersen minus an edge: exactly the two endpoint-deleted MCSs.
  {
    Graph p = petersen();
    std::vector<Edge> edges(p.edges().begin() + 1, p.edges().end());
    Graph h(10, std::move(edges));  // drop edge (0,1)
    ColourOracle oracle(h);
    Decomposition d = enumerate_all_mcs(oracle);
    REQUIRE(d.mcs_list.size() == 2);
    for (const EdgeSet& mcs : d.mcs_list)
      REQUIRE(validate_mcs(oracle, mcs).all());
    REQUIRE(d.mcs_list == testing::brute_enumerate_mcs(oracle));
  }

  // Class-one controls: nothing to find, everything is buffer.
  for (const Graph& g : {k4(), k33(), prism()}) {
    ColourOracle oracle(g);
    Decomposition d = enumerate_all_mcs(oracle);
    REQUIRE(d.complete);
    REQUIRE(d.mcs_list.empty());
    REQUIRE(d.m_g.empty());
    REQUIRE(d.c_g.empty());
    REQUIRE(d.b_g == g.full_edge_set());
    REQUIRE(testing::brute_enumerate_mcs(oracle).empty());
  }
}

TEST_CASE("enumerate_all_mcs on the example fixtures") {
  // The three designed gadgets are pairwise disjoint MCSs, but they are not
  // alone: the hub vertex has degree 2 inside any two-gadget scope, where it
  // plays the midway-vertex role of the chain unit. That yields one 23-edge
  // MCS per gadget pair (10 edges of each gadget, both hub spokes, one ring
  // edge) plus 21 three-gadget weaves of 34 edges. All 27 are genuine.
  {
    Graph f2 = fixture_example2();
    ColourOracle oracle(f2);
    Decomposition d = enumerate_all_mcs(oracle);
    REQUIRE(d.complete);
    REQUIRE(d.mcs_list.size() == 27);
    std::size_t gadgets = 0, pair_units = 0, weaves = 0;
    for (const EdgeSet& mcs : d.mcs_list) {
      if (mcs.count() == 12) ++gadgets;
      if (mcs.count() == 23) ++pair_units;
      if (mcs.count() == 34) ++weaves;
    }
    REQUIRE(gadgets == 3);
    REQUIRE(pair_units == 3);
    REQUIRE(weaves == 21);
    for (Vertex g = 0; g < 3; ++g) {
      EdgeSet designed = edge_set_of(f2, detail::gadget9(g));
      REQUIRE(std::find(d.mcs_list.begin(), d.mcs_list.end(), designed) !=
              d.mcs_list.end());
    }
    REQUIRE(d.m_g == f2.full_edge_set());
    REQUIRE(d.c_g.empty());
    REQUIRE(d.b_g.empty());
    REQUIRE_FALSE(find_disjointness_violation(f2, d).has_value());
    for (const EdgeSet& mcs : d.mcs_list)
      REQUIRE(validate_mcs(oracle, mcs).all());
  }

  // The chain: four designed MCSs covering every edge.
  {
    Graph c4 = chain_cluster(4);
    ColourOracle oracle(c4);
    Decomposition d = enumerate_all_mcs(oracle);
    REQUIRE(d.complete);
    REQUIRE(d.mcs_list.size() == 4);
    std::vector<EdgeSet> expected;
    for (std::uint32_t i = 0; i < 4; ++i)
      expected.push_back(edge_set_of(c4, detail::chain_mcs_pairs(4, i)));
    std::sort(expected.begin(), expected.end());
    REQUIRE(d.mcs_list == expected);
    REQUIRE(d.m_g == c4.full_edge_set());
    REQUIRE(d.c_g.empty());
    REQUIRE(d.b_g.empty());
    for (const EdgeSet& mcs : d.mcs_list)
      REQUIRE(validate_mcs(oracle, mcs).all());
  }
}

TEST_CASE("grow_from_edge recovers an MCS around a conflicting edge") {
  // Petersen: protect one conflict edge, forbid the other.
  {
    Graph p = petersen();
    ColourOracle oracle(p);
    auto minimal = enumerate_minimal_colourings(oracle, 2, 1);
    REQUIRE(minimal.colourings.size() == 1);
    EdgeSet conflicts = minimal.colourings[0].conflict_set;
    std::size_t e = conflicts.first();
    EdgeSet forbidden = conflicts.without(e);
    EdgeSet mcs = grow_from_edge(oracle, static_cast<EdgeIndex>(e),
                                 forbidden);
    REQUIRE(mcs.test(e));
    REQUIRE_FALSE(mcs.intersects(forbidden));
    REQUIRE(validate_mcs(oracle, mcs).all());
  }

  // Fixture: growing inside one gadget returns exactly that gadget.
  {
    Graph f2 = fixture_example2();
    ColourOracle oracle(f2);
    EdgeSet g0 = edge_set_of(f2, detail::gadget9(0));
    EdgeSet g1 = edge_set_of(f2, detail::gadget9(1));
    EdgeSet g2 = edge_set_of(f2, detail::gadget9(2));
    EdgeSet forbidden(f2.n_edges());
    forbidden.set(g1.first());
    forbidden.set(g2.first());
    EdgeSet grown = grow_from_edge(
        oracle, static_cast<EdgeIndex>(g0.first()), forbidden);
    REQUIRE(grown == g0);
  }

  // Class-one host: nothing conflicting can ever be grown.
  {
    Graph g = k4();
    ColourOracle oracle(g);
    REQUIRE_THROWS_AS(grow_from_edge(oracle, 0, EdgeSet(g.n_edges())),
                      contract_error);
  }

  // Forbidding the seed edge is a contract violation.
  {
    Graph p = petersen();
    ColourOracle oracle(p);
    EdgeSet forbidden(p.n_edges());
    forbidden.set(0);
    REQUIRE_THROWS_AS(grow_from_edge(oracle, 0, forbidden), contract_error);
  }
}

TEST_CASE("validate_mcs flags non-critical scopes") {
  Graph p = petersen();
  ColourOracle oracle(p);

  // Full Petersen: conflicting but not minimal, and no single deletion
  // relaxes it (that is exactly why its resistance is 2).
  McsValidation full = validate_mcs(oracle, p.full_edge_set());
  REQUIRE_FALSE(full.minimal);
  REQUIRE_FALSE(full.resistance_one);
  REQUIRE_FALSE(full.strictly_subcubic);
  REQUIRE(full.bridgeless);
  REQUIRE(full.degrees_two_or_three);
  REQUIRE_FALSE(full.all());

  // P - v plus one pendant edge back to v: bridged, degree-1 vertex.
  EdgeSet mcs = shrink_to_mcs(oracle, p.full_edge_set());
  EdgeSet missing = p.full_edge_set() - mcs;
  EdgeSet pendant = mcs;
  pendant.set(missing.first());
  McsValidation bad = validate_mcs(oracle, pendant);
  REQUIRE_FALSE(bad.minimal);
  REQUIRE(bad.resistance_one);
  REQUIRE_FALSE(bad.bridgeless);
  REQUIRE_FALSE(bad.degrees_two_or_three);
  REQUIRE_FALSE(bad.all());
}

TEST_CASE("find_disjointness_violation catches fabricated overlaps") {
  Graph p = petersen();
  Decomposition fake;
  EdgeSet a(p.n_edges()), b(p.n_edges());
  a.set(edge_index_of(p, 0, 1));
  b.set(edge_index_of(p, 0, 4));  // edge-disjoint, share vertex 0
  fake.mcs_list = {a, b};
  auto hit = find_disjointness_violation(p, fake);
  REQUIRE(hit.has_value());
  REQUIRE(hit->first == 0);
  REQUIRE(hit->second == 1);
}
