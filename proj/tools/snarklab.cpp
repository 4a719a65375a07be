#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "snarklab/analyze.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/criticality.hpp"
#include "snarklab/dot.hpp"
#include "snarklab/edge_list.hpp"
#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/graph6.hpp"
#include "snarklab/hitting.hpp"
#include "snarklab/report.hpp"

namespace fs = std::filesystem;
using namespace snarklab;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kIncomplete = 2;
constexpr int kViolation = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string detect_format(const fs::path& path, const std::string& flag) {
  if (!flag.empty()) return flag;
  std::string ext = path.extension().string();
  if (ext == ".g6") return "g6";
  if (ext == ".edges" || ext == ".txt") return "edges";
  throw parse_error("cannot infer format of " + path.string() +
                    "; pass --format", 0);
}

Graph load_graph(const fs::path& path, const std::string& format_flag) {
  std::string format = detect_format(path, format_flag);
  std::string text = read_file(path);
  if (format == "g6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return parse_graph6(line);
    throw parse_error(path.string() + ": no graph6 line found", 0);
  }
  return parse_edge_list(text);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + out_path, 0);
  out << content;
}

EdgeSet edge_set_from_indices(std::size_t m,
                              const std::vector<EdgeIndex>& indices) {
  EdgeSet s(m);
  for (EdgeIndex i : indices) s.set(i);
  return s;
}

struct CommonArgs {
  std::string input;
  std::string format;
  std::uint64_t budget = 0;
  std::string out;
};

int run_analyze(const CommonArgs& common,
                const std::vector<std::string>& skips, bool timings,
                const std::string& dot_path) {
  Graph g = load_graph(common.input, common.format);
  AnalyzeOptions opt;
  opt.budget = common.budget;
  opt.timings = timings;
  for (const std::string& s : skips) {
    if (s == "oddness") opt.skip_oddness = true;
    if (s == "hypo") opt.skip_hypo = true;
    if (s == "clusters") opt.skip_clusters = true;
  }
  std::string name = fs::path(common.input).stem().string();
  AnalysisReport rep = run_analysis(g, name, opt);
  write_output(common.out, emit_report(rep));

  if (!dot_path.empty()) {
    if (rep.m_g && rep.c_g && rep.k_g) {
      std::string dot = render_dot(
          g, name, edge_set_from_indices(g.n_edges(), *rep.m_g),
          edge_set_from_indices(g.n_edges(), *rep.c_g),
          edge_set_from_indices(g.n_edges(), *rep.k_g));
      write_output(dot_path, dot);
    } else {
      std::cerr << "dot output skipped: analysis incomplete\n";
    }
  }

  if (!propositions_hold(rep)) {
    const ConjectureReport& c = *rep.conjectures;
    std::cerr << "refutation-grade finding in " << name << ":\n";
    if (!c.no_cubic_dense_cluster.pass)
      std::cerr << "  " << c.no_cubic_dense_cluster.certificate << "\n";
    if (!c.covered_graph_one_sparse_cluster.pass)
      std::cerr << "  " << c.covered_graph_one_sparse_cluster.certificate
                << "\n";
    return kViolation;
  }
  return rep.complete ? kOk : kIncomplete;
}

int run_dot(const CommonArgs& common) {
  Graph g = load_graph(common.input, common.format);
  std::string name = fs::path(common.input).stem().string();
  ColourOracle oracle(g);
  if (common.budget) oracle.set_budget(common.budget);
  Decomposition decomp = enumerate_all_mcs(oracle);
  if (!decomp.complete) {
    std::cerr << "error: enumeration truncated by budget\n";
    return kIncomplete;
  }
  MinHittingSets mhs = min_hitting_sets(decomp);
  EdgeSet k_g(g.n_edges());
  for (const EdgeSet& s : mhs.sets) k_g |= s;
  write_output(common.out, render_dot(g, name, decomp.m_g, decomp.c_g, k_g));
  return kOk;
}

struct SuiteRow {
  std::string text;
  int severity = kOk;
};

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

SuiteRow suite_one(const fs::path& file, std::uint64_t budget) {
  SuiteRow row;
  std::string name = file.stem().string();
  try {
    Graph g = load_graph(file, "");
    ColourOracle oracle(g);
    if (budget) oracle.set_budget(budget);
    Decomposition decomp = enumerate_all_mcs(oracle);
    std::ostringstream line;
    line << pad(name, 12) << pad(std::to_string(g.n_vertices()), 5)
         << pad(std::to_string(g.n_edges()), 5);
    if (!decomp.complete) {
      line << pad("-", 4) << pad(std::to_string(decomp.mcs_list.size()), 5)
           << pad("-", 10) << pad("-", 13) << pad("-", 12) << "incomplete";
      row.text = line.str();
      row.severity = kIncomplete;
      return row;
    }
    ResistanceResult res = resistance(oracle);
    TheoremVerdicts tv = verify_hitting_theorems(oracle);
    ConjectureVerdicts cv = check_conjectures(g, decomp, res);

    bool props = tv.all() && cv.no_cubic_dense_cluster.pass &&
                 cv.covered_graph_one_sparse_cluster.pass;
    bool conjectures = cv.oddness_bound.pass &&
                       cv.critical_iff_densely_sparse.pass;
    line << pad(std::to_string(res.r), 4)
         << pad(std::to_string(decomp.mcs_list.size()), 5)
         << pad(tv.all() ? "pass" : "FAIL", 10)
         << pad(props ? "pass" : "FAIL", 13)
         << pad(conjectures ? "pass" : "candidate", 12) << "yes";
    row.text = line.str();
    row.severity = props ? kOk : kViolation;
    if (!props) {
      for (const TheoremCheck* check :
           {&tv.resistance_equals_min_hitting, &tv.min_hits_delete_to_colourable,
            &tv.critical_subgraph_routes_agree,
            &tv.conflict_edges_have_private_mcs, &tv.disjoint_family_forces_r})
        if (!check->pass && !check->certificate.empty())
          row.text += "\n    " + check->certificate;
      if (!cv.no_cubic_dense_cluster.pass)
        row.text += "\n    " + cv.no_cubic_dense_cluster.certificate;
      if (!cv.covered_graph_one_sparse_cluster.pass)
        row.text += "\n    " + cv.covered_graph_one_sparse_cluster.certificate;
    }
    if (!conjectures) {
      if (!cv.oddness_bound.pass)
        row.text += "\n    counterexample candidate: " +
                    cv.oddness_bound.certificate;
      if (!cv.critical_iff_densely_sparse.pass)
        row.text += "\n    counterexample candidate: " +
                    cv.critical_iff_densely_sparse.certificate;
    }
  } catch (const budget_exceeded&) {
    row.text = pad(name, 12) + "budget exhausted";
    row.severity = kIncomplete;
  } catch (const invariant_violation& e) {
    row.text = pad(name, 12) + "REFUTED: " + e.what();
    row.severity = kViolation;
  } catch (const contract_error& e) {
    row.text = pad(name, 12) + "incomplete: " + e.what();
    row.severity = kIncomplete;
  } catch (const parse_error& e) {
    row.text = pad(name, 12) + "error: " + e.what();
    row.severity = kInputError;
  }
  return row;
}

int run_suite(const std::string& dir, std::uint64_t budget, int jobs) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: " << dir << " is not a directory\n";
    return kInputError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".g6" || ext == ".edges" || ext == ".txt")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<SuiteRow> rows(files.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < files.size();)
      rows[i] = suite_one(files[i], budget);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::cout << pad("graph", 12) << pad("n", 5) << pad("m", 5) << pad("r", 4)
            << pad("mcs", 5) << pad("theorems", 10) << pad("propositions", 13)
            << pad("conjectures", 12) << "complete\n";
  int exit_code = kOk;
  bool any_error = false, any_incomplete = false;
  for (const SuiteRow& row : rows) {
    std::cout << row.text << "\n";
    if (row.severity == kViolation) exit_code = kViolation;
    if (row.severity == kInputError) any_error = true;
    if (row.severity == kIncomplete) any_incomplete = true;
  }
  if (exit_code == kViolation) return kViolation;
  if (any_error) return kInputError;
  if (any_incomplete) return kIncomplete;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact resistance and criticality analysis for snarks"};
  app.require_subcommand(1);

  CommonArgs analyze_args;
  std::vector<std::string> skips;
  bool timings = false;
  std::string dot_path;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "run the full pipeline on one graph and emit a JSON report");
  analyze->add_option("input", analyze_args.input, "graph file")->required();
  analyze->add_option("--format", analyze_args.format, "input format")
      ->check(CLI::IsMember({"g6", "edges"}));
  analyze->add_option("--budget", analyze_args.budget,
                      "max colouring-search calls (0 = unlimited)");
  analyze->add_option("--skip", skips, "stages to skip")
      ->check(CLI::IsMember({"oddness", "hypo", "clusters"}));
  analyze->add_option("--out", analyze_args.out, "write the report here");
  analyze->add_option("--dot", dot_path, "also write a DOT rendering here");
  analyze->add_flag("--timings", timings, "record wall-clock stage timings");

  CommonArgs dot_args;
  CLI::App* dot = app.add_subcommand(
      "dot", "emit a DOT rendering with the edge classes styled");
  dot->add_option("input", dot_args.input, "graph file")->required();
  dot->add_option("--format", dot_args.format, "input format")
      ->check(CLI::IsMember({"g6", "edges"}));
  dot->add_option("--budget", dot_args.budget,
                  "max colouring-search calls (0 = unlimited)");
  dot->add_option("--out", dot_args.out, "write the DOT here");

  std::string suite_dir;
  std::uint64_t suite_budget = 0;
  int jobs = 1;
  CLI::App* suite = app.add_subcommand(
      "suite", "verify the hitting theorems and cluster propositions over a "
               "directory of graphs");
  suite->add_option("dir", suite_dir, "corpus directory")->required();
  suite->add_option("--budget", suite_budget,
                    "per-graph colouring-search budget (0 = unlimited)");
  suite->add_option("--jobs", jobs, "parallel workers across files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return run_analyze(analyze_args, skips, timings, dot_path);
    if (*dot) return run_dot(dot_args);
    return run_suite(suite_dir, suite_budget, jobs);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const budget_exceeded& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return kIncomplete;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
