#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spq/generate.hpp"
#include "spq/release.hpp"

namespace spq {

enum class Algo { Canon, Sssp, BottleneckPure, BottleneckGauss };

Algo parse_algo(const std::string& name);
std::string algo_name(Algo algo);

struct ExperimentConfig {
  Algo algo = Algo::Canon;
  GraphFamily family = GraphFamily::Path;
  std::vector<int> sizes;  // each >= 4
  double epsilon = 1.0;    // +infinity disables noise
  double delta = 0.0;
  int trials = 10;         // >= 1
  std::uint64_t seed = 0;
  double hub_multiplier = 1.0;
  std::string out_path;  // CSV written here when nonempty

  void validate() const;
};

struct ErrorRow {
  int n = 0;
  int trial = 0;
  double max_err = 0.0;
  double mean_err = 0.0;
  double seconds = 0.0;
};

/// Per (size, trial) additive-error summary plus a log-log slope of max error
/// across sizes. The slope fit excludes the smallest size and needs at least
/// 3 sizes and strictly positive errors; otherwise it stays empty (flagged).
struct ErrorReport {
  std::vector<ErrorRow> rows;
  std::optional<double> slope;
  /// Per-trial slope fits (same window), for median comparisons across
  /// algorithms; empty under the same conditions as `slope`.
  std::vector<double> trial_slopes;
};

/// Runs the configured algorithm over generated graphs and compares against
/// the exact oracles on every pair. Deterministic in config + seed (the
/// seconds column excepted). Writes the report CSV when out_path is set.
ErrorReport run_experiment(const ExperimentConfig& config);

/// Report CSV: header `n,trial,max_err,mean_err,seconds`.
void write_report_csv(const ErrorReport& report, std::ostream& out);

/// Release CSV: header `u,v,value`, one row per unordered pair u < v.
void write_release_csv(const CountRelease& release, std::ostream& out);
struct ReleaseRow {
  int u, v;
  double value;
};
std::vector<ReleaseRow> read_release_csv(std::istream& in);

}  // namespace spq
