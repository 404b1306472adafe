#include "spq/canon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spq/detail/source_order.hpp"

namespace spq {

int canon_hub_count(int n, double multiplier) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (!(multiplier > 0)) throw std::invalid_argument("hub multiplier must be positive");
  double ln_n = std::log(static_cast<double>(n));
  double zeta = std::cbrt(static_cast<double>(n)) * std::pow(ln_n, -2.0 / 3.0);
  double s = std::ceil(multiplier * 100.0 * zeta * ln_n);
  return static_cast<int>(std::min<double>(n, std::max(1.0, s)));
}

std::vector<int> sample_hub_set(int n, int count, Rng& rng) {
  if (count < 0 || count > n) throw std::invalid_argument("hub count out of range");
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::size_t SegmentCatalog::pair_slot(int i, int j) const {
  // i < j over hub indices
  std::size_t h = hubs_.size();
  return static_cast<std::size_t>(i) * (2 * h - i - 1) / 2 + (j - i - 1);
}

const std::vector<int>& SegmentCatalog::cut_vertices(int i, int j) const {
  if (i > j) std::swap(i, j);
  return cut_vertices_[pair_slot(i, j)];
}

const std::vector<int>& SegmentCatalog::decomposition(int i, int j) const {
  if (i > j) std::swap(i, j);
  return decomposition_[pair_slot(i, j)];
}

SegmentCatalog SegmentCatalog::build(const Graph& g, const PathIndex& index,
                                     std::vector<int> hubs) {
  if (hubs.size() < 2) throw std::invalid_argument("segment catalog needs |S| >= 2");
  std::sort(hubs.begin(), hubs.end());

  SegmentCatalog cat;
  const int n = g.vertex_count();
  const int h = static_cast<int>(hubs.size());
  cat.hubs_ = std::move(hubs);
  cat.hub_index_.assign(n, -1);
  for (int i = 0; i < h; ++i) cat.hub_index_[cat.hubs_[i]] = i;

  // Pass 1: per vertex, the set of neighbors reached along hub-pair paths.
  // Two distinct neighbors at most matter; a third means "cut vertex" no
  // matter what, so overflow is just flagged.
  std::vector<int> nbr0(n, -1), nbr1(n, -1);
  std::vector<char> nbr_overflow(n, 0);
  auto note_neighbor = [&](int w, int x) {
    if (nbr0[w] == x || nbr1[w] == x) return;
    if (nbr0[w] < 0)
      nbr0[w] = x;
    else if (nbr1[w] < 0)
      nbr1[w] = x;
    else
      nbr_overflow[w] = 1;
  };
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      auto verts = index.path_vertices(g, cat.hubs_[i], cat.hubs_[j]);
      for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
        note_neighbor(verts[k], verts[k + 1]);
        note_neighbor(verts[k + 1], verts[k]);
      }
    }
  }

  // Pass 2: cut vertices and canonical segments per hub pair. An interior
  // vertex w with path neighbors {a, b} is a cut vertex iff it is a hub
  // (endpoint of some other hub path) or some hub path uses a third edge at w.
  cat.segment_of_edge_.assign(g.edge_count(), -1);
  std::vector<std::vector<int>> seg_ids_by_min_endpoint(n);
  auto segment_id = [&](int a, int b, const std::vector<int>& edge_slice) {
    if (a > b) std::swap(a, b);
    for (int id : seg_ids_by_min_endpoint[a])
      if (cat.segments_[id].b == b) return id;
    Segment seg;
    seg.a = a;
    seg.b = b;
    seg.edges = edge_slice;
    seg.attr_sum = 0.0;
    for (int e : seg.edges) seg.attr_sum += g.edge(e).attribute;
    int id = static_cast<int>(cat.segments_.size());
    for (int e : seg.edges) cat.segment_of_edge_[e] = id;
    cat.segments_.push_back(std::move(seg));
    seg_ids_by_min_endpoint[a].push_back(id);
    return id;
  };

  std::size_t pair_count = static_cast<std::size_t>(h) * (h - 1) / 2;
  cat.cut_vertices_.resize(pair_count);
  cat.decomposition_.resize(pair_count);
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      int u = cat.hubs_[i], v = cat.hubs_[j];
      auto verts = index.path_vertices(g, u, v);
      auto edges = index.path_edges(g, u, v);
      std::vector<int>& cuts = cat.cut_vertices_[cat.pair_slot(i, j)];
      std::vector<int> cut_pos;
      cut_pos.push_back(0);
      for (std::size_t k = 1; k + 1 < verts.size(); ++k) {
        int w = verts[k];
        bool cut = cat.hub_index_[w] >= 0 || nbr_overflow[w];
        if (!cut) {
          int a = verts[k - 1], b = verts[k + 1];
          if (nbr0[w] >= 0 && nbr0[w] != a && nbr0[w] != b) cut = true;
          if (nbr1[w] >= 0 && nbr1[w] != a && nbr1[w] != b) cut = true;
        }
        if (cut) cut_pos.push_back(static_cast<int>(k));
      }
      cut_pos.push_back(static_cast<int>(verts.size()) - 1);
      for (int p : cut_pos) cuts.push_back(verts[p]);

      std::vector<int>& decomp = cat.decomposition_[cat.pair_slot(i, j)];
      for (std::size_t k = 0; k + 1 < cut_pos.size(); ++k) {
        int p = cut_pos[k], q = cut_pos[k + 1];
        std::vector<int> slice(edges.begin() + p, edges.begin() + q);
        decomp.push_back(segment_id(verts[p], verts[q], slice));
      }
    }
  }
  return cat;
}

double canon_laplace_scale(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  return 2.0 / epsilon;
}

CountRelease canon_apsd(const Graph& g, const PathIndex& index, PrivacyBudget budget,
                        Rng rng, const CanonOptions& options) {
  if (options.noise_on) {
    budget.validate();
    if (budget.delta != 0)
      throw std::invalid_argument("canon-apsd is pure DP: delta must be 0");
  }
  const int n = g.vertex_count();
  int s = std::min(n, std::max(2, canon_hub_count(n, options.hub_multiplier)));
  Rng hub_rng = rng.substream(0);
  std::vector<int> hubs = sample_hub_set(n, s, hub_rng);
  SegmentCatalog catalog = SegmentCatalog::build(g, index, std::move(hubs));

  NoiseSpec spec = options.noise_on
                       ? NoiseSpec::laplace(canon_laplace_scale(budget.epsilon))
                       : NoiseSpec::none();

  // Noise attached to objects: one draw per segment, one per edge, reused by
  // every pair that touches them.
  Rng seg_rng = rng.substream(1);
  std::vector<double> noisy_segment(catalog.segment_count());
  for (int i = 0; i < catalog.segment_count(); ++i)
    noisy_segment[i] = catalog.segment(i).attr_sum + sample(spec, seg_rng);
  Rng edge_rng = rng.substream(2);
  std::vector<double> noisy_edge(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    noisy_edge[e] = g.edge(e).attribute + sample(spec, edge_rng);

  // f_S over hub pairs: sum of noisy canonical-segment values.
  const int h = catalog.hub_count();
  std::vector<double> f_s(static_cast<std::size_t>(h) * h, 0.0);
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      double sum = 0.0;
      for (int id : catalog.decomposition(i, j)) sum += noisy_segment[id];
      f_s[static_cast<std::size_t>(i) * h + j] = sum;
      f_s[static_cast<std::size_t>(j) * h + i] = sum;
    }
  }

  std::vector<char> in_s(n, 0);
  for (int hub : catalog.hubs()) in_s[hub] = 1;

  CountRelease release(n, budget);
  std::vector<int> order, bucket;
  std::vector<double> pref(n), pref_first(n), pref_last(n);
  std::vector<int> first_hub(n), last_hub(n), hub_hits(n);
  for (int u = 0; u < n; ++u) {
    detail::source_order_by_hop(index, u, order, bucket);
    pref[u] = 0.0;
    hub_hits[u] = in_s[u] ? 1 : 0;
    first_hub[u] = last_hub[u] = in_s[u] ? u : -1;
    pref_first[u] = pref_last[u] = 0.0;
    for (int v : order) {
      if (v == u) continue;
      int e = index.parent_edge(u, v);
      int p = g.other_endpoint(e, v);
      pref[v] = pref[p] + noisy_edge[e];
      hub_hits[v] = hub_hits[p];
      first_hub[v] = first_hub[p];
      last_hub[v] = last_hub[p];
      pref_first[v] = pref_first[p];
      pref_last[v] = pref_last[p];
      if (in_s[v]) {
        ++hub_hits[v];
        if (first_hub[v] < 0) {
          first_hub[v] = v;
          pref_first[v] = pref[v];
        }
        last_hub[v] = v;
        pref_last[v] = pref[v];
      }
      if (v > u) {
        if (hub_hits[v] >= 2) {
          int xi = catalog.hub_index(first_hub[v]);
          int zi = catalog.hub_index(last_hub[v]);
          double value = pref_first[v] + f_s[static_cast<std::size_t>(xi) * h + zi] +
                         (pref[v] - pref_last[v]);
          release.set(u, v, value, ReleaseRule::SegmentBridge);
        } else {
          release.set(u, v, pref[v], ReleaseRule::EdgeSum);
        }
      }
    }
  }
  return release;
}

double segment_sensitivity_probe(const Graph& g, const SegmentCatalog& catalog,
                                 int edge, double delta_w) {
  if (edge < 0 || edge >= g.edge_count()) throw std::invalid_argument("edge out of range");
  double l1 = 0.0;
  for (const auto& seg : catalog.segments()) {
    double base = 0.0, bumped = 0.0;
    for (int e : seg.edges) {
      double a = g.edge(e).attribute;
      base += a;
      bumped += (e == edge) ? a + delta_w : a;
    }
    l1 += std::abs(bumped - base);
  }
  return l1;
}

}  // namespace spq
