#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

struct ClusterReport {
  std::vector<std::size_t> members;
  std::string kind;
  bool operator==(const ClusterReport&) const = default;
};

struct CheckReport {
  bool applicable = false;
  bool pass = true;
  std::string certificate;
  bool operator==(const CheckReport&) const = default;
};

struct ConjectureReport {
  CheckReport oddness_bound;
  CheckReport critical_iff_densely_sparse;
  CheckReport no_cubic_dense_cluster;
  CheckReport covered_graph_one_sparse_cluster;
  bool operator==(const ConjectureReport&) const = default;
};

// Every quantity the pipeline computes, in one serializable record. Stages
// cut off by the oracle budget or a --skip flag leave their fields absent;
// `complete` is false whenever the budget truncated anything. Timings are
// attached only on request so that default output is byte-deterministic.
struct AnalysisReport {
  int schema = 1;
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  bool cubic = false;
  std::vector<Edge> edges;
  bool complete = true;

  std::optional<std::string> graph_class;
  std::optional<std::size_t> r;
  std::optional<std::size_t> r_v;

  std::optional<std::size_t> mcs_count;
  std::optional<std::vector<std::vector<EdgeIndex>>> mcs;
  std::optional<std::vector<EdgeIndex>> m_g;
  std::optional<std::vector<EdgeIndex>> c_g;
  std::optional<std::vector<EdgeIndex>> b_g;
  std::optional<std::vector<EdgeIndex>> k_g;
  std::optional<std::size_t> min_hitting_size;
  std::optional<std::vector<std::vector<EdgeIndex>>> min_hitting_sets;

  std::optional<std::vector<ClusterReport>> clusters;
  std::optional<std::size_t> omega;
  std::optional<bool> hypohamiltonian;
  std::optional<ConjectureReport> conjectures;

  std::optional<std::map<std::string, std::int64_t>> timings_ms;

  bool operator==(const AnalysisReport&) const = default;
};

namespace detail {

template <typename T>
void put(nlohmann::ordered_json& j, const char* key,
         const std::optional<T>& v) {
  if (v)
    j[key] = *v;
  else
    j[key] = nullptr;
}

template <typename T>
void get(const nlohmann::ordered_json& j, const char* key,
         std::optional<T>& v) {
  const auto& field = j.at(key);
  if (field.is_null())
    v.reset();
  else
    v = field.get<T>();
}

inline nlohmann::ordered_json check_to_json(const CheckReport& c) {
  return {{"applicable", c.applicable},
          {"pass", c.pass},
          {"certificate", c.certificate}};
}

inline CheckReport check_from_json(const nlohmann::ordered_json& j) {
  CheckReport c;
  c.applicable = j.at("applicable").get<bool>();
  c.pass = j.at("pass").get<bool>();
  c.certificate = j.at("certificate").get<std::string>();
  return c;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = r.schema;
  j["name"] = r.name;
  j["n"] = r.n;
  j["m"] = r.m;
  j["cubic"] = r.cubic;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : r.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["complete"] = r.complete;
  detail::put(j, "class", r.graph_class);
  detail::put(j, "r", r.r);
  detail::put(j, "r_v", r.r_v);
  detail::put(j, "mcs_count", r.mcs_count);
  detail::put(j, "mcs", r.mcs);
  detail::put(j, "m_g", r.m_g);
  detail::put(j, "c_g", r.c_g);
  detail::put(j, "b_g", r.b_g);
  detail::put(j, "k_g", r.k_g);
  detail::put(j, "min_hitting_size", r.min_hitting_size);
  detail::put(j, "min_hitting_sets", r.min_hitting_sets);
  if (r.clusters) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ClusterReport& c : *r.clusters)
      arr.push_back({{"members", c.members}, {"kind", c.kind}});
    j["clusters"] = std::move(arr);
  } else {
    j["clusters"] = nullptr;
  }
  detail::put(j, "omega", r.omega);
  detail::put(j, "hypohamiltonian", r.hypohamiltonian);
  if (r.conjectures) {
    j["conjectures"] = {
        {"oddness_bound", detail::check_to_json(r.conjectures->oddness_bound)},
        {"critical_iff_densely_sparse",
         detail::check_to_json(r.conjectures->critical_iff_densely_sparse)},
        {"no_cubic_dense_cluster",
         detail::check_to_json(r.conjectures->no_cubic_dense_cluster)},
        {"covered_graph_one_sparse_cluster",
         detail::check_to_json(
             r.conjectures->covered_graph_one_sparse_cluster)}};
  } else {
    j["conjectures"] = nullptr;
  }
  detail::put(j, "timings_ms", r.timings_ms);
  return j;
}

inline std::string emit_report(const AnalysisReport& r) {
  return to_json(r).dump(2) + "\n";
}

inline AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  AnalysisReport r;
  try {
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1)
      throw parse_error("report: unsupported schema " +
                        std::to_string(r.schema), 0);
    r.name = j.at("name").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.cubic = j.at("cubic").get<bool>();
    for (const auto& e : j.at("edges"))
      r.edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    r.complete = j.at("complete").get<bool>();
    detail::get(j, "class", r.graph_class);
    detail::get(j, "r", r.r);
    detail::get(j, "r_v", r.r_v);
    detail::get(j, "mcs_count", r.mcs_count);
    detail::get(j, "mcs", r.mcs);
    detail::get(j, "m_g", r.m_g);
    detail::get(j, "c_g", r.c_g);
    detail::get(j, "b_g", r.b_g);
    detail::get(j, "k_g", r.k_g);
    detail::get(j, "min_hitting_size", r.min_hitting_size);
    detail::get(j, "min_hitting_sets", r.min_hitting_sets);
    if (!j.at("clusters").is_null()) {
      std::vector<ClusterReport> cl;
      for (const auto& c : j.at("clusters")) {
        ClusterReport one;
        one.members = c.at("members").get<std::vector<std::size_t>>();
        one.kind = c.at("kind").get<std::string>();
        cl.push_back(std::move(one));
      }
      r.clusters = std::move(cl);
    }
    detail::get(j, "omega", r.omega);
    detail::get(j, "hypohamiltonian", r.hypohamiltonian);
    if (!j.at("conjectures").is_null()) {
      const auto& c = j.at("conjectures");
      ConjectureReport rep;
      rep.oddness_bound = detail::check_from_json(c.at("oddness_bound"));
      rep.critical_iff_densely_sparse =
          detail::check_from_json(c.at("critical_iff_densely_sparse"));
      rep.no_cubic_dense_cluster =
          detail::check_from_json(c.at("no_cubic_dense_cluster"));
      rep.covered_graph_one_sparse_cluster =
          detail::check_from_json(c.at("covered_graph_one_sparse_cluster"));
      r.conjectures = rep;
    }
    detail::get(j, "timings_ms", r.timings_ms);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw parse_error(std::string("report: ") + e.what(), 0);
  }
  return r;
}

inline AnalysisReport parse_report(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw parse_error(std::string("report: ") + e.what(), 0);
  }
  return report_from_json(j);
}

}  // namespace snarklab
