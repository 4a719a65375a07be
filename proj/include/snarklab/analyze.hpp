#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "snarklab/colouring.hpp"
#include "snarklab/criticality.hpp"
#include "snarklab/edge_set.hpp"
#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/hitting.hpp"
#include "snarklab/report.hpp"
#include "snarklab/structure.hpp"

namespace snarklab {

struct AnalyzeOptions {
  std::uint64_t budget = 0;  // oracle-call cap; 0 is unlimited
  bool skip_oddness = false;
  bool skip_hypo = false;
  bool skip_clusters = false;
  bool timings = false;
};

namespace detail {

inline CheckReport check_report_of(const ConjectureCheck& c) {
  return {c.applicable, c.pass, c.certificate};
}

inline std::vector<EdgeIndex> indices_of(const EdgeSet& s) {
  return s.indices();
}

}  // namespace detail

// Full pipeline over one graph. Budget truncation marks the report
// incomplete and leaves the untouched stages absent rather than guessing;
// any failed 3-criticality invariant on a produced MCS throws
// invariant_violation.
inline AnalysisReport run_analysis(const Graph& g, const std::string& name,
                                   const AnalyzeOptions& opt = {}) {
  using Clock = std::chrono::steady_clock;
  AnalysisReport rep;
  rep.name = name;
  rep.n = g.n_vertices();
  rep.m = g.n_edges();
  rep.cubic = g.is_cubic();
  rep.edges = g.edges();
  if (opt.timings) rep.timings_ms.emplace();

  ColourOracle oracle(g);
  if (opt.budget) oracle.set_budget(opt.budget);

  auto timed = [&](const char* stage, auto&& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    if (rep.timings_ms)
      (*rep.timings_ms)[stage] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
              .count();
  };

  ResistanceResult res;
  bool have_resistance = false;
  timed("resistance", [&] {
    try {
      res = resistance(oracle);
      have_resistance = true;
    } catch (const budget_exceeded&) {
      rep.complete = false;
    }
  });
  if (have_resistance) {
    rep.r = res.r;
    rep.r_v = res.r_v;
    rep.graph_class = res.r == 0 ? "one" : "two";
  }

  Decomposition decomp;
  timed("decomposition", [&] { decomp = enumerate_all_mcs(oracle); });
  if (!decomp.complete) rep.complete = false;
  rep.mcs_count = decomp.mcs_list.size();
  {
    std::vector<std::vector<EdgeIndex>> lists;
    for (const EdgeSet& s : decomp.mcs_list)
      lists.push_back(detail::indices_of(s));
    rep.mcs = std::move(lists);
  }
  try {
    for (const EdgeSet& s : decomp.mcs_list) {
      McsValidation v = validate_mcs(oracle, s);
      if (!v.all())
        throw invariant_violation(
            "run_analysis: enumerated subgraph fails a 3-criticality check "
            "in " +
            name);
    }
  } catch (const budget_exceeded&) {
    rep.complete = false;
  }
  if (auto bad = find_disjointness_violation(g, decomp))
    throw invariant_violation(
        "run_analysis: edge-disjoint subgraphs " +
        std::to_string(bad->first) + " and " + std::to_string(bad->second) +
        " share a vertex in " + name);

  if (decomp.complete) {
    rep.m_g = detail::indices_of(decomp.m_g);
    rep.c_g = detail::indices_of(decomp.c_g);
    rep.b_g = detail::indices_of(decomp.b_g);
    timed("hitting", [&] {
      MinHittingSets mhs = min_hitting_sets(decomp);
      rep.min_hitting_size = mhs.size;
      std::vector<std::vector<EdgeIndex>> sets;
      EdgeSet critical(g.n_edges());
      for (const EdgeSet& s : mhs.sets) {
        sets.push_back(detail::indices_of(s));
        critical |= s;
      }
      rep.min_hitting_sets = std::move(sets);
      rep.k_g = detail::indices_of(critical);
    });

    if (!opt.skip_clusters) {
      timed("clusters", [&] {
        std::vector<ClusterReport> out;
        for (const Cluster& c : clusters(decomp))
          out.push_back({c.members, to_string(c.kind)});
        rep.clusters = std::move(out);
      });
    }
  }

  bool bridgeless = scope_bridges(g, g.full_edge_set()).empty();
  if (!opt.skip_oddness && rep.cubic && bridgeless)
    timed("oddness", [&] { rep.omega = oddness(g).omega; });

  if (!opt.skip_hypo)
    timed("hypohamiltonian", [&] { rep.hypohamiltonian = is_hypohamiltonian(g); });

  if (decomp.complete && have_resistance) {
    timed("conjectures", [&] {
      ConjectureVerdicts v = check_conjectures(g, decomp, res);
      ConjectureReport cr;
      cr.oddness_bound = detail::check_report_of(v.oddness_bound);
      cr.critical_iff_densely_sparse =
          detail::check_report_of(v.critical_iff_densely_sparse);
      cr.no_cubic_dense_cluster =
          detail::check_report_of(v.no_cubic_dense_cluster);
      cr.covered_graph_one_sparse_cluster =
          detail::check_report_of(v.covered_graph_one_sparse_cluster);
      rep.conjectures = cr;
    });
  }

  return rep;
}

// The two cluster checks are proved facts, not open questions; a failure is
// a refutation finding, distinct from a conjecture counterexample.
inline bool propositions_hold(const AnalysisReport& rep) {
  if (!rep.conjectures) return true;
  return rep.conjectures->no_cubic_dense_cluster.pass &&
         rep.conjectures->covered_graph_one_sparse_cluster.pass;
}

}  // namespace snarklab
