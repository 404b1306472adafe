#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spq/bottleneck.hpp"
#include "spq/canon.hpp"
#include "spq/experiment.hpp"
#include "spq/generate.hpp"
#include "spq/oracle.hpp"
#include "spq/sssp_asrq.hpp"

namespace {

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    sizes.push_back(std::stoi(tok));
  }
  if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
  return sizes;
}

std::pair<int, int> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--pair", "expected u,v");
  return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

void print_value(std::ostream& out, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out << buf;
}

struct QueryArgs {
  std::string graph_path;
  std::string algo = "canon";
  double eps = 1.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  double hub_mult = 1.0;
  bool no_noise = false;
  std::vector<std::string> pairs;
  std::string out_path;
};

int run_query(const QueryArgs& a) {
  spq::Graph g = spq::read_edge_list_file(a.graph_path);
  spq::PathIndex index = spq::PathIndex::build(g);
  spq::Algo algo = spq::parse_algo(a.algo);
  bool noise_on = !a.no_noise && !std::isinf(a.eps);
  spq::PrivacyBudget budget{a.eps, a.delta};
  spq::Rng rng(a.seed);

  // Uniform pair-value accessor over the two release kinds.
  std::function<double(int, int)> value;
  std::unique_ptr<spq::CountRelease> count_rel;
  std::unique_ptr<spq::BottleneckRelease> bneck_rel;
  switch (algo) {
    case spq::Algo::Canon:
      count_rel = std::make_unique<spq::CountRelease>(
          spq::canon_apsd(g, index, budget, rng, {a.hub_mult, noise_on}));
      break;
    case spq::Algo::Sssp:
      count_rel = std::make_unique<spq::CountRelease>(
          spq::sssp_asrq(g, index, budget, rng, {a.hub_mult, noise_on}));
      break;
    case spq::Algo::BottleneckPure:
    case spq::Algo::BottleneckGauss:
      if (algo == spq::Algo::BottleneckGauss && noise_on && budget.delta <= 0)
        throw std::invalid_argument("bottleneck-gauss needs delta > 0");
      if (algo == spq::Algo::BottleneckPure && budget.delta != 0)
        throw std::invalid_argument("bottleneck-pure needs delta == 0");
      bneck_rel = std::make_unique<spq::BottleneckRelease>(
          spq::bottleneck_release(g, index, budget, rng, noise_on));
      break;
  }
  if (count_rel)
    value = [&](int u, int v) { return count_rel->value(u, v); };
  else
    value = [&](int u, int v) { return u == v ? 0.0 : bneck_rel->value(u, v); };

  if (!a.pairs.empty()) {
    for (const auto& text : a.pairs) {
      auto [u, v] = parse_pair(text);
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("pair vertex out of range");
      std::cout << u << "," << v << ",";
      print_value(std::cout, value(u, v));
      std::cout << "\n";
    }
    return 0;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw std::runtime_error("cannot write " + a.out_path);
    out = &file;
  }
  if (count_rel) {
    spq::write_release_csv(*count_rel, *out);
  } else {
    *out << "u,v,value\n";
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        *out << u << "," << v << ",";
        print_value(*out, value(u, v));
        *out << "\n";
      }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private shortest-path range queries"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph and write its edge list");
  std::string gen_family = "path", gen_out;
  int gen_n = 16;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family, "path|grid|erdos-renyi|random-geometric|random-tree");
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::Range(2, 1 << 20));
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // query
  auto* query = app.add_subcommand("query", "Run one algorithm over a graph file");
  QueryArgs qa;
  query->add_option("--graph", qa.graph_path, "edge-list file")->required();
  query->add_option("--algo", qa.algo, "canon|sssp|bottleneck-pure|bottleneck-gauss");
  query->add_option("--eps", qa.eps, "privacy budget epsilon (inf disables noise)");
  query->add_option("--delta", qa.delta, "privacy budget delta");
  query->add_option("--seed", qa.seed, "noise seed");
  query->add_option("--hub-mult", qa.hub_mult, "hub-count multiplier");
  query->add_flag("--no-noise", qa.no_noise, "disable noise (oracle mode)");
  query->add_option("--pair", qa.pairs, "answer only this u,v pair (repeatable)");
  query->add_option("--out", qa.out_path, "release CSV path (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "Compare a release CSV against the exact oracle");
  std::string eval_graph, eval_release, eval_algo = "canon";
  eval->add_option("--graph", eval_graph, "edge-list file")->required();
  eval->add_option("--release", eval_release, "release CSV")->required();
  eval->add_option("--algo", eval_algo, "which oracle: counting algos or bottleneck");

  // bench
  auto* bench = app.add_subcommand("bench", "Error-scaling experiment");
  std::string bench_algo = "canon", bench_family = "path", bench_sizes = "64,128,256",
              bench_out;
  spq::ExperimentConfig bc;
  bench->add_option("--algo", bench_algo, "canon|sssp|bottleneck-pure|bottleneck-gauss");
  bench->add_option("--family", bench_family, "graph family");
  bench->add_option("--sizes", bench_sizes, "comma-separated vertex counts");
  bench->add_option("--eps", bc.epsilon, "privacy budget epsilon");
  bench->add_option("--delta", bc.delta, "privacy budget delta");
  bench->add_option("--trials", bc.trials, "trials per size");
  bench->add_option("--seed", bc.seed, "experiment seed");
  bench->add_option("--hub-mult", bc.hub_multiplier, "hub-count multiplier");
  bench->add_option("--out", bc.out_path, "report CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      spq::Graph g =
          spq::generate_graph(spq::parse_family(gen_family), gen_n, gen_seed);
      if (gen_out.empty())
        spq::write_edge_list(g, std::cout);
      else
        spq::write_edge_list_file(g, gen_out);
      return 0;
    }
    if (query->parsed()) return run_query(qa);
    if (eval->parsed()) {
      spq::Graph g = spq::read_edge_list_file(eval_graph);
      spq::PathIndex index = spq::PathIndex::build(g);
      spq::Algo algo = spq::parse_algo(eval_algo);
      bool bneck = algo == spq::Algo::BottleneckPure || algo == spq::Algo::BottleneckGauss;
      std::ifstream in(eval_release);
      if (!in) throw std::runtime_error("cannot read " + eval_release);
      auto rows = spq::read_release_csv(in);
      if (rows.empty()) throw std::runtime_error("release CSV has no rows");
      double max_err = 0.0, total = 0.0;
      for (const auto& row : rows) {
        if (row.u < 0 || row.v < 0 || row.u >= g.vertex_count() ||
            row.v >= g.vertex_count())
          throw std::runtime_error("release row vertex out of range");
        double exact = bneck ? spq::exact_bottleneck(g, index, row.u, row.v)
                             : spq::exact_count(g, index, row.u, row.v);
        double err = std::abs(row.value - exact);
        max_err = std::max(max_err, err);
        total += err;
      }
      std::cout << "pairs=" << rows.size() << " max_err=";
      print_value(std::cout, max_err);
      std::cout << " mean_err=";
      print_value(std::cout, total / static_cast<double>(rows.size()));
      std::cout << "\n";
      return 0;
    }
    if (bench->parsed()) {
      bc.algo = spq::parse_algo(bench_algo);
      bc.family = spq::parse_family(bench_family);
      bc.sizes = parse_sizes(bench_sizes);
      spq::ErrorReport report = spq::run_experiment(bc);
      if (bc.out_path.empty()) spq::write_report_csv(report, std::cout);
      if (report.slope) {
        std::cout << "slope=";
        print_value(std::cout, *report.slope);
        std::cout << "\n";
      } else {
        std::cout << "slope=undefined\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
