#pragma once

#include <cstdint>
#include <vector>

#include "spq/budget.hpp"

namespace spq {

/// Which release branch produced a pair's answer.
enum class ReleaseRule : std::uint8_t {
  SegmentBridge,  // canon: noisy-edge prefix + segment sum + noisy-edge suffix
  EdgeSum,        // either algorithm: sum of per-edge noisy attributes
  HubTree,        // sssp: an endpoint is a hub; its privatized tree answers
  HubSplit,       // sssp: interior hub x; tree(x) answers both halves
};

/// All-pairs noisy counting answers. Noise is attached to objects (edges,
/// segments, tree records), so values are frozen: re-reading a pair returns
/// the identical number. Symmetric; diagonal is 0.
class CountRelease {
 public:
  CountRelease(int n, PrivacyBudget budget)
      : n_(n), budget_(budget),
        value_(static_cast<std::size_t>(n) * n, 0.0),
        rule_(static_cast<std::size_t>(n) * n, ReleaseRule::EdgeSum) {}

  int vertex_count() const { return n_; }
  const PrivacyBudget& budget() const { return budget_; }

  double value(int u, int v) const { return value_[idx(u, v)]; }
  ReleaseRule rule(int u, int v) const { return rule_[idx(u, v)]; }

  void set(int u, int v, double value, ReleaseRule rule) {
    value_[idx(u, v)] = value_[idx(v, u)] = value;
    rule_[idx(u, v)] = rule_[idx(v, u)] = rule;
  }

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_;
  PrivacyBudget budget_;
  std::vector<double> value_;
  std::vector<ReleaseRule> rule_;
};

}  // namespace spq
