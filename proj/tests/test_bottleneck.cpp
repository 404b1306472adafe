#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "spq/bottleneck.hpp"
#include "spq/oracle.hpp"
#include "test_util.hpp"

using spq::Graph;
using spq::PathIndex;
using spq::Rng;

TEST_CASE("scale formulas") {
  CHECK(spq::bottleneck_laplace_scale(1.0) == 1.0);
  CHECK(spq::bottleneck_laplace_scale(0.25) == 4.0);
  CHECK(spq::bottleneck_gaussian_scale(1.0, 1.25 / std::exp(2.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS(spq::bottleneck_laplace_scale(0.0));
  CHECK_THROWS(spq::bottleneck_gaussian_scale(2.0, 0.1));
  CHECK_THROWS(spq::bottleneck_gaussian_scale(0.5, 0.0));
}

TEST_CASE("noise off reproduces the exact minimum, including the worked path") {
  Graph g = Graph::build(4, {{0, 1, 1, 5}, {1, 2, 1, 1}, {2, 3, 1, 7}});
  PathIndex index = PathIndex::build(g);
  auto rel = spq::bottleneck_release(g, index, {1.0, 0.0}, Rng(1), false);
  CHECK(rel.value(0, 3) == 1.0);
  CHECK(rel.value(0, 1) == 5.0);
  CHECK(rel.value(2, 3) == 7.0);
  CHECK(spq::bottleneck_error(rel, g, index) == 0.0);
}

TEST_CASE("argmin edge matches a brute-force path scan on random graphs") {
  for (int trial = 0; trial < 10; ++trial) {
    int n = 10 + 2 * trial;
    Graph g = spq::generate_graph(testutil::mixed_family(trial), n, 8300 + trial);
    PathIndex index = PathIndex::build(g);
    auto rel = spq::bottleneck_release(g, index, {1.0, 0.0}, Rng(trial), true);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) {
          CHECK(rel.argmin_edge(u, v) == -1);
          continue;
        }
        int best = -1;
        for (int e : index.path_edges(g, u, v)) {
          if (best < 0 || g.edge(e).attribute < g.edge(best).attribute ||
              (g.edge(e).attribute == g.edge(best).attribute && e < best))
            best = e;
        }
        CHECK(rel.argmin_edge(u, v) == best);
        CHECK(rel.value(u, v) == rel.noisy_attributes()[best]);
      }
  }
}

TEST_CASE("argmin ties break to the smallest edge index") {
  Graph g = Graph::build(4, {{0, 1, 1, 3}, {1, 2, 1, 3}, {2, 3, 1, 3}});
  PathIndex index = PathIndex::build(g);
  auto rel = spq::bottleneck_release(g, index, {1.0, 0.0}, Rng(1), true);
  CHECK(rel.argmin_edge(0, 3) == 0);
  CHECK(rel.argmin_edge(1, 3) == 1);
  CHECK(rel.argmin_edge(3, 1) == 1);
}

TEST_CASE("argmin mapping is stable across noise seeds; values are not") {
  Graph g = spq::generate_graph(spq::GraphFamily::ErdosRenyi, 30, 55);
  PathIndex index = PathIndex::build(g);
  auto a = spq::bottleneck_release(g, index, {0.5, 0.0}, Rng(1), true);
  auto b = spq::bottleneck_release(g, index, {0.5, 0.0}, Rng(2), true);
  bool differs = false;
  for (int u = 0; u < 30; ++u)
    for (int v = u + 1; v < 30; ++v) {
      CHECK(a.argmin_edge(u, v) == b.argmin_edge(u, v));
      if (a.value(u, v) != b.value(u, v)) differs = true;
    }
  CHECK(differs);
}

TEST_CASE("released error is a single noise draw, never an accumulation") {
  Graph g = spq::generate_graph(spq::GraphFamily::Grid, 25, 66);
  PathIndex index = PathIndex::build(g);
  auto rel = spq::bottleneck_release(g, index, {0.8, 0.1}, Rng(10), true);
  for (int u = 0; u < 25; ++u)
    for (int v = u + 1; v < 25; ++v) {
      int e = rel.argmin_edge(u, v);
      double gamma = spq::exact_bottleneck(g, index, u, v);
      CHECK(gamma == g.edge(e).attribute);
      CHECK(rel.value(u, v) - gamma == rel.noisy_attributes()[e] - g.edge(e).attribute);
    }
}

TEST_CASE("noisy attributes are released unclamped") {
  // tiny epsilon makes negative outputs essentially certain somewhere
  Graph g = spq::generate_graph(spq::GraphFamily::Path, 64, 2);
  PathIndex index = PathIndex::build(g);
  auto rel = spq::bottleneck_release(g, index, {0.01, 0.0}, Rng(3), true);
  bool negative = false;
  for (double w : rel.noisy_attributes())
    if (w < 0) negative = true;
  CHECK(negative);
}

TEST_CASE("delta selects the branch") {
  Graph g = spq::generate_graph(spq::GraphFamily::Path, 16, 4);
  PathIndex index = PathIndex::build(g);
  CHECK_NOTHROW(spq::bottleneck_release(g, index, {1.0, 0.0}, Rng(1), true));
  CHECK_NOTHROW(spq::bottleneck_release(g, index, {1.0, 0.05}, Rng(1), true));
  CHECK_THROWS(spq::bottleneck_release(g, index, {0.0, 0.0}, Rng(1), true));
  CHECK_THROWS(spq::bottleneck_release(g, index, {2.0, 0.05}, Rng(1), true));
}
