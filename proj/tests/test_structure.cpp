#include <cstddef>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "snarklab/colouring.hpp"
#include "snarklab/criticality.hpp"
#include "snarklab/edge_set.hpp"
#include "snarklab/errors.hpp"
#include "snarklab/generators.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/graph6.hpp"
#include "snarklab/hitting.hpp"
#include "snarklab/structure.hpp"

using namespace snarklab;

namespace {

Decomposition synthetic_decomposition(
    std::size_t n_edges, const std::vector<std::vector<EdgeIndex>>& family) {
  Decomposition d;
  for (const auto& indices : family) {
    EdgeSet s(n_edges);
    for (EdgeIndex i : indices) s.set(i);
    d.mcs_list.push_back(std::move(s));
  }
  return d;
}

// Cubic, but a central cut vertex feeds three 5-vertex blobs: at most one
// blob can absorb the centre, so no perfect matching exists.
Graph starved_cubic() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 3; ++i) {
    Vertex b = 1 + 5 * i;
    e.push_back({0, b});
    e.push_back({b, static_cast<Vertex>(b + 1)});
    e.push_back({b, static_cast<Vertex>(b + 2)});
    e.push_back({static_cast<Vertex>(b + 1), static_cast<Vertex>(b + 3)});
    e.push_back({static_cast<Vertex>(b + 1), static_cast<Vertex>(b + 4)});
    e.push_back({static_cast<Vertex>(b + 2), static_cast<Vertex>(b + 3)});
    e.push_back({static_cast<Vertex>(b + 2), static_cast<Vertex>(b + 4)});
    e.push_back({static_cast<Vertex>(b + 3), static_cast<Vertex>(b + 4)});
  }
  return Graph(16, e);
}

std::size_t disjoint_pairs(const std::vector<EdgeSet>& mcs) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < mcs.size(); ++a)
    for (std::size_t b = a + 1; b < mcs.size(); ++b)
      if (!mcs[a].intersects(mcs[b])) ++count;
  return count;
}

}  // namespace

TEST_CASE("clusters split and classify synthetic families") {
  Decomposition two_pairs =
      synthetic_decomposition(10, {{0, 1}, {5, 6}, {1, 2}, {9}, {6, 7}});
  std::vector<Cluster> cl = clusters(two_pairs);
  REQUIRE(cl.size() == 3);
  REQUIRE(cl[0].members == std::vector<std::size_t>{0, 2});
  REQUIRE(cl[0].kind == ClusterKind::dense);
  REQUIRE(cl[1].members == std::vector<std::size_t>{1, 4});
  REQUIRE(cl[1].kind == ClusterKind::dense);
  REQUIRE(cl[2].members == std::vector<std::size_t>{3});
  REQUIRE(cl[2].kind == ClusterKind::singleton);

  Decomposition triangle =
      synthetic_decomposition(6, {{0, 1}, {1, 2}, {0, 2}});
  cl = clusters(triangle);
  REQUIRE(cl.size() == 1);
  REQUIRE(cl[0].kind == ClusterKind::densely_sparse);

  Decomposition path = synthetic_decomposition(6, {{0, 1}, {1, 2}, {2, 3}});
  cl = clusters(path);
  REQUIRE(cl.size() == 1);
  REQUIRE(cl[0].kind == ClusterKind::sparse);

  Decomposition incomplete;
  incomplete.complete = false;
  REQUIRE_THROWS_AS(clusters(incomplete), contract_error);
}

TEST_CASE("clusters classify the corpus") {
  SECTION("petersen forms one densely sparse cluster") {
    Graph g = petersen();
    ColourOracle oracle(g);
    Decomposition d = enumerate_all_mcs(oracle);
    std::vector<Cluster> cl = clusters(d);
    REQUIRE(cl.size() == 1);
    REQUIRE(cl[0].members.size() == 10);
    REQUIRE(cl[0].kind == ClusterKind::densely_sparse);
  }

  SECTION("fixture 2 forms one sparse cluster") {
    Graph g = fixture_example2();
    ColourOracle oracle(g);
    Decomposition d = enumerate_all_mcs(oracle);
    std::vector<Cluster> cl = clusters(d);
    REQUIRE(cl.size() == 1);
    REQUIRE(cl[0].members.size() == 27);
    REQUIRE(cl[0].kind == ClusterKind::sparse);
  }

  SECTION("chains move from singleton through dense to sparse") {
    Graph c1 = chain_cluster(1);
    ColourOracle o1(c1);
    std::vector<Cluster> cl = clusters(enumerate_all_mcs(o1));
    REQUIRE(cl.size() == 1);
    REQUIRE(cl[0].kind == ClusterKind::singleton);

    Graph c2 = chain_cluster(2);
    ColourOracle o2(c2);
    cl = clusters(enumerate_all_mcs(o2));
    REQUIRE(cl.size() == 1);
    REQUIRE(cl[0].members.size() == 2);
    REQUIRE(cl[0].kind == ClusterKind::dense);

    Graph c4 = chain_cluster(4);
    ColourOracle o4(c4);
    Decomposition d = enumerate_all_mcs(o4);
    cl = clusters(d);
    REQUIRE(cl.size() == 1);
    REQUIRE(cl[0].members.size() == 4);
    REQUIRE(cl[0].kind == ClusterKind::sparse);
    REQUIRE(disjoint_pairs(d.mcs_list) == 3);
  }

  SECTION("petersen minus an edge is a dense pair") {
    std::vector<Edge> e = petersen().edges();
    e.erase(e.begin());
    Graph host(10, e);
    ColourOracle oracle(host);
    std::vector<Cluster> cl = clusters(enumerate_all_mcs(oracle));
    REQUIRE(cl.size() == 1);
    REQUIRE(cl[0].members.size() == 2);
    REQUIRE(cl[0].kind == ClusterKind::dense);
  }
}

TEST_CASE("oddness over the corpus") {
  SECTION("class-one control") {
    Graph g = k4();
    OddnessResult o = oddness(g);
    REQUIRE(o.omega == 0);
    REQUIRE(o.odd_components.empty());
    REQUIRE(o.witness_two_factor ==
            edge_set_of(g, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  }

  SECTION("petersen splits into two pentagons") {
    Graph g = petersen();
    OddnessResult o = oddness(g);
    REQUIRE(o.omega == 2);
    REQUIRE(o.witness_two_factor.count() == 10);
    REQUIRE(o.odd_components ==
            std::vector<std::vector<Vertex>>{{0, 4, 3, 8, 5},
                                             {1, 2, 7, 9, 6}});
    std::vector<std::size_t> deg = scope_degrees(g, o.witness_two_factor);
    for (Vertex v = 0; v < g.n_vertices(); ++v) REQUIRE(deg[v] == 2);

    OddnessResult again = oddness(g);
    REQUIRE(again.omega == o.omega);
    REQUIRE(again.witness_two_factor == o.witness_two_factor);
    REQUIRE(again.odd_components == o.odd_components);
  }

  SECTION("omega is invariant under relabeling") {
    REQUIRE(oddness(parse_graph6("IsP@OkWHG")).omega == 2);
  }

  SECTION("flower snark and fixture 2") {
    Graph j5 = flower(5);
    OddnessResult oj = oddness(j5);
    REQUIRE(oj.omega == 2);
    std::vector<std::size_t> sizes;
    for (const auto& c : oj.odd_components) sizes.push_back(c.size());
    REQUIRE(sizes == std::vector<std::size_t>{15, 5});

    Graph f2 = fixture_example2();
    OddnessResult of = oddness(f2);
    REQUIRE(of.omega == 4);
    sizes.clear();
    std::size_t covered = 0;
    for (const auto& c : of.odd_components) {
      REQUIRE(c.size() % 2 == 1);
      sizes.push_back(c.size());
      covered += c.size();
    }
    REQUIRE(sizes == std::vector<std::size_t>{13, 5, 5, 5});
    REQUIRE(covered == f2.n_vertices());
    std::vector<std::size_t> deg = scope_degrees(f2, of.witness_two_factor);
    for (Vertex v = 0; v < f2.n_vertices(); ++v) REQUIRE(deg[v] == 2);
  }

  SECTION("class-two cubic graphs have even omega at least 2") {
    for (const Graph& g : {petersen(), flower(5), fixture_example2()}) {
      std::size_t omega = oddness(g).omega;
      REQUIRE(omega >= 2);
      REQUIRE(omega % 2 == 0);
    }
  }

  SECTION("rejects subcubic and matching-free inputs") {
    REQUIRE_THROWS_AS(oddness(chain_cluster(1)), contract_error);
    REQUIRE_THROWS_AS(oddness(starved_cubic()), contract_error);
  }
}

TEST_CASE("hypohamiltonicity on the corpus") {
  REQUIRE(is_hypohamiltonian(petersen()));
  REQUIRE(is_hypohamiltonian(flower(5)));
  REQUIRE_FALSE(is_hypohamiltonian(k4()));
  REQUIRE_FALSE(is_hypohamiltonian(fixture_example2()));
}

TEST_CASE("conjecture checks across the corpus") {
  SECTION("petersen: every check applies and passes") {
    Graph g = petersen();
    ColourOracle oracle(g);
    Decomposition d = enumerate_all_mcs(oracle);
    ConjectureVerdicts v = check_conjectures(g, d, resistance(oracle));
    REQUIRE(v.oddness_bound.applicable);
    REQUIRE(v.critical_iff_densely_sparse.applicable);
    REQUIRE(v.no_cubic_dense_cluster.applicable);
    REQUIRE(v.covered_graph_one_sparse_cluster.applicable);
    REQUIRE(v.all());
    REQUIRE(v.oddness_bound.certificate.empty());
    REQUIRE(v.critical_iff_densely_sparse.certificate.empty());
  }

  SECTION("fixture 2: every check applies and passes") {
    Graph g = fixture_example2();
    ColourOracle oracle(g);
    Decomposition d = enumerate_all_mcs(oracle);
    ConjectureVerdicts v = check_conjectures(g, d, resistance(oracle));
    REQUIRE(v.oddness_bound.applicable);
    REQUIRE(v.critical_iff_densely_sparse.applicable);
    REQUIRE(v.no_cubic_dense_cluster.applicable);
    REQUIRE(v.covered_graph_one_sparse_cluster.applicable);
    REQUIRE(v.all());
  }

  SECTION("subcubic chains leave the cubic checks vacuous") {
    for (std::uint32_t n : {2u, 4u}) {
      Graph g = chain_cluster(n);
      ColourOracle oracle(g);
      Decomposition d = enumerate_all_mcs(oracle);
      ResistanceResult res;
      res.r = (n + 1) / 2;
      ConjectureVerdicts v = check_conjectures(g, d, res);
      REQUIRE_FALSE(v.oddness_bound.applicable);
      REQUIRE_FALSE(v.critical_iff_densely_sparse.applicable);
      REQUIRE_FALSE(v.no_cubic_dense_cluster.applicable);
      REQUIRE_FALSE(v.covered_graph_one_sparse_cluster.applicable);
      REQUIRE(v.all());
    }
  }

  SECTION("class-one control is vacuous except the critical biconditional") {
    Graph g = k4();
    ColourOracle oracle(g);
    Decomposition d = enumerate_all_mcs(oracle);
    ConjectureVerdicts v = check_conjectures(g, d, resistance(oracle));
    REQUIRE_FALSE(v.oddness_bound.applicable);
    REQUIRE(v.critical_iff_densely_sparse.applicable);
    REQUIRE_FALSE(v.no_cubic_dense_cluster.applicable);
    REQUIRE_FALSE(v.covered_graph_one_sparse_cluster.applicable);
    REQUIRE(v.all());
  }

  SECTION("incomplete decompositions are refused") {
    Decomposition incomplete;
    incomplete.complete = false;
    REQUIRE_THROWS_AS(
        check_conjectures(k4(), incomplete, ResistanceResult{}),
        contract_error);
  }
}

TEST_CASE("chain census matches the predicted shapes") {
  ClusterKind expected[] = {ClusterKind::singleton, ClusterKind::dense,
                           ClusterKind::sparse, ClusterKind::sparse,
                           ClusterKind::sparse};
  std::size_t critical_sizes[] = {23, 10, 46, 20, 69};
  for (std::size_t n = 1; n <= 5; ++n) {
    ChainCensus c = chain_cluster_census(n);
    REQUIRE(c.complete);
    REQUIRE(c.mcs_count == n);
    REQUIRE(c.cluster_count == 1);
    REQUIRE(c.kind == expected[n - 1]);
    REQUIRE(c.r == (n + 1) / 2);
    REQUIRE(c.critical.count() == critical_sizes[n - 1]);
    REQUIRE(c.as_predicted);
  }

  SECTION("the four-block critical subgraph is the two shared blocks") {
    Graph g = chain_cluster(4);
    EdgeSet front = edge_set_of(g, detail::chain_mcs_pairs(4, 0)) &
                    edge_set_of(g, detail::chain_mcs_pairs(4, 1));
    EdgeSet back = edge_set_of(g, detail::chain_mcs_pairs(4, 2)) &
                   edge_set_of(g, detail::chain_mcs_pairs(4, 3));
    REQUIRE(chain_cluster_census(4).critical == (front | back));
  }

  SECTION("budget exhaustion reports a partial census") {
    ChainCensus c = chain_cluster_census(3, 50);
    REQUIRE_FALSE(c.complete);
    REQUIRE_FALSE(c.as_predicted);
  }

  REQUIRE_THROWS_AS(chain_cluster_census(0), contract_error);
}
