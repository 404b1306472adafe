#include "spq/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spq/bottleneck.hpp"
#include "spq/canon.hpp"
#include "spq/detail/source_order.hpp"
#include "spq/sssp_asrq.hpp"

namespace spq {

Algo parse_algo(const std::string& name) {
  if (name == "canon") return Algo::Canon;
  if (name == "sssp") return Algo::Sssp;
  if (name == "bottleneck-pure" || name == "bottleneck") return Algo::BottleneckPure;
  if (name == "bottleneck-gauss") return Algo::BottleneckGauss;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algo_name(Algo algo) {
  switch (algo) {
    case Algo::Canon: return "canon";
    case Algo::Sssp: return "sssp";
    case Algo::BottleneckPure: return "bottleneck-pure";
    case Algo::BottleneckGauss: return "bottleneck-gauss";
  }
  throw std::invalid_argument("unknown algorithm");
}

void ExperimentConfig::validate() const {
  if (sizes.empty()) throw std::invalid_argument("at least one size is required");
  for (int n : sizes)
    if (n < 4) throw std::invalid_argument("each size must be at least 4");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta >= 0 && delta < 1)) throw std::invalid_argument("delta must be in [0, 1)");
  if (!(hub_multiplier > 0)) throw std::invalid_argument("hub multiplier must be positive");
  switch (algo) {
    case Algo::Canon:
    case Algo::BottleneckPure:
      if (delta != 0) throw std::invalid_argument("this algorithm is pure DP: delta must be 0");
      break;
    case Algo::Sssp:
    case Algo::BottleneckGauss:
      if (delta <= 0) throw std::invalid_argument("this algorithm needs delta > 0");
      break;
  }
}

namespace {

bool noise_disabled(double epsilon) {
  return std::isinf(epsilon);
}

struct PairErrors {
  double max_err = 0.0;
  double mean_err = 0.0;
};

template <typename Value>
PairErrors count_errors(const Graph& g, const PathIndex& index, Value&& released) {
  const int n = g.vertex_count();
  PairErrors out;
  double total = 0.0;
  std::size_t pairs = 0;
  std::vector<int> order, bucket;
  std::vector<double> exact(n);
  for (int u = 0; u < n; ++u) {
    detail::source_order_by_hop(index, u, order, bucket);
    exact[u] = 0.0;
    for (int v : order) {
      if (v == u) continue;
      int e = index.parent_edge(u, v);
      exact[v] = exact[g.other_endpoint(e, v)] + g.edge(e).attribute;
      if (v > u) {
        double err = std::abs(released(u, v) - exact[v]);
        out.max_err = std::max(out.max_err, err);
        total += err;
        ++pairs;
      }
    }
  }
  out.mean_err = total / static_cast<double>(pairs);
  return out;
}

template <typename Value>
PairErrors bottleneck_errors(const Graph& g, const PathIndex& index, Value&& released) {
  const int n = g.vertex_count();
  PairErrors out;
  double total = 0.0;
  std::size_t pairs = 0;
  std::vector<int> order, bucket;
  std::vector<double> exact(n);
  for (int u = 0; u < n; ++u) {
    detail::source_order_by_hop(index, u, order, bucket);
    for (int v : order) {
      if (v == u) continue;
      int e = index.parent_edge(u, v);
      int p = g.other_endpoint(e, v);
      exact[v] = p == u ? g.edge(e).attribute
                        : std::min(exact[p], g.edge(e).attribute);
      if (v > u) {
        double err = std::abs(released(u, v) - exact[v]);
        out.max_err = std::max(out.max_err, err);
        total += err;
        ++pairs;
      }
    }
  }
  out.mean_err = total / static_cast<double>(pairs);
  return out;
}

// Least-squares slope of ln(err) against ln(n).
std::optional<double> loglog_slope(const std::vector<double>& ns,
                                   const std::vector<double>& errs) {
  if (ns.size() < 2) return std::nullopt;
  for (double e : errs)
    if (!(e > 0)) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double x = std::log(ns[i]), y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double k = static_cast<double>(ns.size());
  double denom = k * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (k * sxy - sx * sy) / denom;
}

void append_double(std::string& line, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  line += buf;
}

}  // namespace

ErrorReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const bool noise_on = !noise_disabled(config.epsilon);
  PrivacyBudget budget{config.epsilon, config.delta};

  ErrorReport report;
  Rng root(config.seed);
  for (std::size_t si = 0; si < config.sizes.size(); ++si) {
    int n = config.sizes[si];
    Rng size_rng = root.substream(si);
    for (int t = 0; t < config.trials; ++t) {
      Rng trial_rng = size_rng.substream(static_cast<std::uint64_t>(t));
      Graph g = generate_graph(config.family, n, trial_rng.substream(0).seed());
      PathIndex index = PathIndex::build(g);
      Rng algo_rng = trial_rng.substream(1);

      auto start = std::chrono::steady_clock::now();
      PairErrors errs;
      switch (config.algo) {
        case Algo::Canon: {
          CountRelease rel = canon_apsd(g, index, budget, algo_rng,
                                        {config.hub_multiplier, noise_on});
          errs = count_errors(g, index,
                              [&](int u, int v) { return rel.value(u, v); });
          break;
        }
        case Algo::Sssp: {
          CountRelease rel = sssp_asrq(g, index, budget, algo_rng,
                                       {config.hub_multiplier, noise_on});
          errs = count_errors(g, index,
                              [&](int u, int v) { return rel.value(u, v); });
          break;
        }
        case Algo::BottleneckPure:
        case Algo::BottleneckGauss: {
          BottleneckRelease rel = bottleneck_release(g, index, budget, algo_rng, noise_on);
          errs = bottleneck_errors(g, index,
                                   [&](int u, int v) { return rel.value(u, v); });
          break;
        }
      }
      double seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      report.rows.push_back({n, t, errs.max_err, errs.mean_err, seconds});
    }
  }

  // Slope over the larger sizes: the smallest one is warm-up scale and skews
  // the fit. Per-trial slopes let callers compare medians across algorithms.
  if (config.sizes.size() >= 3) {
    std::vector<double> ns, errs;
    bool ok = true;
    for (std::size_t si = 1; si < config.sizes.size(); ++si) {
      double sum = 0.0;
      for (int t = 0; t < config.trials; ++t)
        sum += report.rows[si * config.trials + t].max_err;
      ns.push_back(config.sizes[si]);
      errs.push_back(sum / config.trials);
    }
    report.slope = loglog_slope(ns, errs);
    for (int t = 0; t < config.trials && ok; ++t) {
      std::vector<double> trial_errs;
      for (std::size_t si = 1; si < config.sizes.size(); ++si)
        trial_errs.push_back(report.rows[si * config.trials + t].max_err);
      auto s = loglog_slope(ns, trial_errs);
      if (!s) {
        ok = false;
        report.trial_slopes.clear();
      } else {
        report.trial_slopes.push_back(*s);
      }
    }
    if (!report.slope) report.trial_slopes.clear();
  }

  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out) throw std::runtime_error("cannot write " + config.out_path);
    write_report_csv(report, out);
  }
  return report;
}

void write_report_csv(const ErrorReport& report, std::ostream& out) {
  out << "n,trial,max_err,mean_err,seconds\n";
  for (const auto& row : report.rows) {
    std::string line = std::to_string(row.n) + "," + std::to_string(row.trial) + ",";
    append_double(line, row.max_err);
    line += ",";
    append_double(line, row.mean_err);
    line += ",";
    append_double(line, row.seconds);
    out << line << "\n";
  }
}

void write_release_csv(const CountRelease& release, std::ostream& out) {
  out << "u,v,value\n";
  const int n = release.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::string line = std::to_string(u) + "," + std::to_string(v) + ",";
      append_double(line, release.value(u, v));
      out << line << "\n";
    }
  }
}

std::vector<ReleaseRow> read_release_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "u,v,value")
    throw std::runtime_error("bad release CSV header");
  std::vector<ReleaseRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    ReleaseRow row;
    if (!(fields >> row.u >> row.v >> row.value))
      throw std::runtime_error("bad release CSV row: " + line);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace spq
