#include "congest/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "congest/bfs_tree.hpp"
#include "congest/oracles.hpp"
#include "congest/rng.hpp"
#include "congest/rounding.hpp"
#include "congest/shortcuts.hpp"

namespace congest {
namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  std::int64_t l = a / std::gcd(a, b) * b;
  require(l > 0 && l <= (std::int64_t{1} << 40), Err::InvalidInput, "denominator blow-up");
  return l;
}

// One denominator for every finite virtual weight.
std::int64_t common_denom(const OverlayNetwork& ov) {
  std::int64_t q = 1;
  for (const auto& row : ov.weights)
    for (const Fraction& f : row)
      if (!f.is_inf()) q = lcm64(q, f.den);
  return q;
}

int member_index(const OverlayNetwork& ov, NodeId u) {
  auto it = std::lower_bound(ov.members.begin(), ov.members.end(), u);
  require(it != ov.members.end() && *it == u, Err::InvalidInput, "node is not an overlay member");
  return static_cast<int>(it - ov.members.begin());
}

}  // namespace

std::vector<NodeId> sample_landmarks(int n, int alpha, NodeId source, std::uint64_t seed) {
  require(n >= 1 && alpha >= 1 && alpha <= n, Err::InvalidInput, "need 0 < alpha <= n");
  require(source >= 0 && source < n, Err::InvalidInput, "source out of range");
  double p = static_cast<double>(alpha) / n;
  std::vector<NodeId> out{source};
  Rng rng(seed);
  for (NodeId u = 0; u < n; ++u) {
    if (u == source) continue;
    if (rng.unit() < p) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OverlayNetwork build_overlay(Simulator& sim, const WeightedGraph& g,
                             const std::vector<NodeId>& landmarks, std::int64_t h, Fraction eps,
                             std::uint64_t seed) {
  require(!landmarks.empty(), Err::InvalidInput, "need at least one landmark");
  OverlayNetwork ov;
  ov.members = landmarks;
  std::sort(ov.members.begin(), ov.members.end());
  ov.h = h;
  ov.eps = eps;

  MultiSourceResult ms = multi_source_bounded_hop(sim, g, ov.members, h, eps, seed);
  int count = static_cast<int>(ov.members.size());
  ov.to_members = std::move(ms.table.values);
  ov.weights.assign(count, std::vector<Fraction>(count, Fraction::inf()));
  for (int i = 0; i < count; ++i) {
    ov.weights[i][i] = Fraction::whole(0);
    for (int j = i + 1; j < count; ++j) {
      Fraction w = frac_min(ov.to_members[i][ov.members[j]], ov.to_members[j][ov.members[i]]);
      ov.weights[i][j] = ov.weights[j][i] = w;
    }
  }
  ov.spd_bound = std::max(1, count - 1);
  return ov;
}

OverlayNetwork reduce_overlay_spd(Simulator& sim, const WeightedGraph& g,
                                  const OverlayNetwork& overlay, std::int64_t beta) {
  require(beta >= 1, Err::InvalidInput, "beta must be >= 1");
  OverlayNetwork out = overlay;
  int count = static_cast<int>(out.members.size());
  if (count <= 1) {
    out.spd_bound = 1;
    return out;
  }

  std::int64_t q = common_denom(overlay);
  auto scaled = [&](const Fraction& f) { return f.num * (q / f.den); };

  // Each member's beta lightest virtual edges, deduplicated across pairs.
  std::vector<WeightedGraph::Edge> light;
  std::vector<std::vector<char>> taken(count, std::vector<char>(count, 0));
  std::int64_t announced = 0;
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<std::int64_t, int>> inc;
    for (int j = 0; j < count; ++j)
      if (j != i && !overlay.weights[i][j].is_inf()) inc.push_back({scaled(overlay.weights[i][j]), j});
    std::sort(inc.begin(), inc.end());
    if (static_cast<std::int64_t>(inc.size()) > beta) inc.resize(beta);
    announced += static_cast<std::int64_t>(inc.size());
    for (auto [w, j] : inc)
      if (!taken[i][j]) {
        taken[i][j] = taken[j][i] = 1;
        light.push_back({std::min(i, j), std::max(i, j), w});
      }
  }

  BfsTree tree = build_bfs_tree(sim, g, 0);
  std::vector<BroadcastItem> items;
  items.reserve(light.size());
  for (const auto& e : light)
    items.push_back({out.members[e.u], {out.members[e.u], out.members[e.v], e.w}});
  // Announcements are per member, not per surviving pair.
  sim.charge_rounds(announced - static_cast<std::int64_t>(items.size()));
  broadcast_all(sim, g, tree, items);

  // Everyone now knows the same light subgraph, so everyone derives the same
  // beta-nearest sets; the resulting shortcuts are broadcast in turn.
  int k = static_cast<int>(std::min<std::int64_t>(beta, count - 1));
  ShortcutSet sc = shortcuts_from_union(WeightedGraph(count, std::move(light)), k);
  std::vector<BroadcastItem> added;
  for (int i = 0; i < count; ++i)
    for (const auto& [j, d] : sc.nearest[i]) {
      Fraction w = reduced_128(d, q);
      if (w < out.weights[i][j]) {
        out.weights[i][j] = out.weights[j][i] = w;
        added.push_back({out.members[i], {out.members[i], out.members[j], d}});
      }
    }
  broadcast_all(sim, g, tree, added);

  std::int64_t ratio = (4 * count) % beta == 0 ? (4 * count) / beta - 1 : (4 * count) / beta;
  out.spd_bound = std::clamp<std::int64_t>(ratio, 1, count - 1);
  return out;
}

std::vector<Fraction> sssp_on_overlay(Simulator& sim, const WeightedGraph& g,
                                      const OverlayNetwork& overlay, NodeId source, Fraction eps) {
  require(eps.num > 0 && !eps.is_inf(), Err::InvalidInput, "eps must be positive");
  int count = static_cast<int>(overlay.members.size());
  int src = member_index(overlay, source);
  if (count == 1) return {Fraction::whole(0)};

  std::int64_t q = common_denom(overlay);
  std::vector<std::vector<std::int64_t>> w(count, std::vector<std::int64_t>(count, kInf));
  std::int64_t w_top = 1;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && !overlay.weights[i][j].is_inf()) {
        w[i][j] = overlay.weights[i][j].num * (q / overlay.weights[i][j].den);
        w_top = std::max(w_top, ceil_div(w[i][j], q));
      }

  std::int64_t h = std::max<std::int64_t>(1, overlay.spd_bound);
  std::int64_t K = ceil_div((eps.num + 2 * eps.den) * h, eps.num);
  int num_scales = ceil_log2(static_cast<std::uint64_t>(h * w_top)) + 1;

  BfsTree tree = build_bfs_tree(sim, g, 0);
  std::vector<Fraction> best(count, Fraction::inf());
  best[src] = Fraction::whole(0);

  for (int scale = 0; scale < num_scales; ++scale) {
    // ceil(2h * w / (eps * 2^scale)) against the rational weight w_int/q.
    std::vector<std::vector<std::int64_t>> rw(count, std::vector<std::int64_t>(count, kInf));
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (w[i][j] != kInf) {
          __int128 num = static_cast<__int128>(2) * h * w[i][j] * eps.den;
          __int128 den = (static_cast<__int128>(eps.num) * q) << scale;
          rw[i][j] = static_cast<std::int64_t>((num + den - 1) / den);
        }

    std::vector<std::int64_t> dist(count, kInf);
    std::vector<char> sent(count, 0);
    dist[src] = 0;
    for (std::int64_t t = 0; t <= K; ++t) {
      std::vector<BroadcastItem> wave;
      for (int i = 0; i < count; ++i)
        if (!sent[i] && dist[i] == t) {
          sent[i] = 1;
          wave.push_back({overlay.members[i], {overlay.members[i], t, scale}});
        }
      // Every virtual round pays the census sweep; a busy one also pays the
      // pipelined broadcast itself.
      sim.charge_rounds(2 * tree.height);
      if (wave.empty()) continue;
      std::vector<int> senders;
      for (const auto& it : wave) senders.push_back(member_index(overlay, it.origin));
      broadcast_all(sim, g, tree, wave);
      for (int i : senders)
        for (int j = 0; j < count; ++j)
          if (rw[i][j] != kInf) {
            std::int64_t cand = t + rw[i][j];
            if (cand <= K && cand < dist[j]) dist[j] = cand;
          }
    }

    Fraction factor = reduced_128(static_cast<__int128>(eps.num) << scale,
                                  static_cast<__int128>(eps.den) * 2 * h);
    for (int j = 0; j < count; ++j)
      if (dist[j] != kInf) best[j] = frac_min(best[j], factor * Fraction::whole(dist[j]));
  }
  return best;
}

SublinearSsspResult sublinear_sssp(Simulator& sim, const WeightedGraph& g, NodeId source,
                                   std::uint64_t seed) {
  require(g.is_connected(), Err::Disconnected, "sublinear_sssp needs a connected graph");
  SublinearSsspResult out;
  out.table.sources = {source};
  if (g.n() == 1) {
    out.table.values = {{Fraction::whole(0)}};
    return out;
  }

  // The hop diameter is assumed known; the parameter choice follows
  // alpha ~ sqrt(n)/hopdiam^(1/4) * log2 n, beta ~ sqrt(hopdiam).
  std::int64_t hop_diam = std::max<std::int64_t>(1, eccentricity_stats(g).hop_diameter);
  double root = std::sqrt(static_cast<double>(g.n())) / std::pow(static_cast<double>(hop_diam), 0.25);
  std::int64_t alpha = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(root * static_cast<double>(log2_ceil_min1(g.n())))), 1,
      g.n());
  std::int64_t beta = std::min<std::int64_t>(alpha, isqrt_ceil(hop_diam));
  Fraction eps = default_eps(g.n());
  out.alpha = alpha;
  out.beta = beta;

  std::vector<NodeId> landmarks = sample_landmarks(g.n(), static_cast<int>(alpha), source,
                                                   derive_seed(seed, 1));
  std::int64_t h = std::max<std::int64_t>(1, ceil_div(g.n() * log2_ceil_min1(g.n()), alpha));
  OverlayNetwork ov = build_overlay(sim, g, landmarks, h, eps, derive_seed(seed, 2));
  OverlayNetwork reduced = reduce_overlay_spd(sim, g, ov, beta);
  std::vector<Fraction> est = sssp_on_overlay(sim, g, reduced, source, eps);

  std::vector<Fraction> row(g.n(), Fraction::inf());
  for (std::size_t j = 0; j < reduced.members.size(); ++j) {
    if (est[j].is_inf()) continue;
    for (NodeId u = 0; u < g.n(); ++u) {
      const Fraction& leg = reduced.to_members[j][u];
      if (!leg.is_inf()) row[u] = frac_min(row[u], leg + est[j]);
    }
  }
  for (NodeId u = 0; u < g.n(); ++u)
    if (row[u].is_inf()) out.hitting_failure = true;
  out.table.values = {std::move(row)};
  return out;
}

}  // namespace congest
