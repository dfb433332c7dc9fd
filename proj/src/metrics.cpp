#include "congest/metrics.hpp"

#include <algorithm>
#include <vector>

#include "congest/bfs_tree.hpp"
#include "congest/rng.hpp"
#include "congest/rounding.hpp"

namespace congest {
namespace {

// Exact single-source distances, distributed: every improvement is
// rebroadcast, so values settle after spd+1 rounds with per-edge load 1.
std::vector<Weight> exact_sssp(Simulator& sim, const WeightedGraph& g, NodeId source) {
  std::vector<Weight> dist(g.n(), kInf);
  dist[source] = 0;
  std::vector<Wake> init{{source, 0}};
  sim.run<Weight>(g, init, [&](NodeCtx<Weight>& ctx) {
    NodeId u = ctx.node();
    bool improved = ctx.round() == 0 && u == source;
    for (const auto& env : ctx.inbox()) {
      Weight cand = sat_add(env.msg, g.edge(env.dir >> 1).w);
      if (cand < dist[u]) {
        dist[u] = cand;
        improved = true;
      }
    }
    if (improved) ctx.broadcast(dist[u]);
  });
  return dist;
}

// ceil(2n * w * eps.den / (eps.num * range))
Weight capped_weight(Weight w, std::int64_t n, const Fraction& eps, Weight range) {
  __int128 num = static_cast<__int128>(2) * n * w * eps.den;
  __int128 den = static_cast<__int128>(eps.num) * range;
  return static_cast<Weight>((num + den - 1) / den);
}

struct CappedSweep {
  DistanceTable table;
  std::int64_t K = 0;
};

// One all-sources capped sweep against the rescaled weights for range D'.
CappedSweep capped_apsp(Simulator& sim, const WeightedGraph& g, const Fraction& eps, Weight range,
                        std::uint64_t seed) {
  CappedSweep out;
  out.K = ceil_div((eps.num + 2 * eps.den) * g.n(), eps.num);
  std::vector<Weight> scaled(g.m());
  for (int e = 0; e < g.m(); ++e) scaled[e] = capped_weight(g.edge(e).w, g.n(), eps, range);
  out.table = bounded_distance_apsp(sim, g, scaled, out.K, seed);
  return out;
}

Fraction descale(std::int64_t d, const Fraction& eps, Weight range, std::int64_t n) {
  return reduced_128(static_cast<__int128>(eps.num) * range * d,
                     static_cast<__int128>(eps.den) * 2 * n);
}

Fraction approx_extremum(Simulator& sim, const WeightedGraph& g, Fraction eps, bool diameter) {
  require(eps.num > 0 && eps <= Fraction::whole(1), Err::InvalidInput, "eps must be in (0, 1]");
  require(g.is_connected(), Err::Disconnected, "metric approximation needs a connected graph");
  if (g.n() == 1) return Fraction::whole(0);

  std::vector<Weight> from0 = exact_sssp(sim, g, 0);
  Weight ecc0 = *std::max_element(from0.begin(), from0.end());
  Weight range = diameter ? 2 * ecc0 : ecc0;

  CappedSweep sweep = capped_apsp(sim, g, eps, range, derive_seed(0x6d65747269636bULL, range));

  // Fold each node's row to its eccentricity, then max or min across nodes;
  // the global fold costs one convergecast plus one downcast on the tree.
  BfsTree tree = build_bfs_tree(sim, g, 0);
  sim.charge_rounds(2 * tree.height);
  std::int64_t best = diameter ? 0 : kInf;
  for (int s = 0; s < g.n(); ++s) {
    std::int64_t ecc = 0;
    for (Weight d : sweep.table.values[s]) ecc = std::max(ecc, d);
    best = diameter ? std::max(best, ecc) : std::min(best, ecc);
  }
  require(best < kInf && best <= sweep.K, Err::Disconnected, "capped sweep left a pair unresolved");
  return descale(best, eps, range, g.n());
}

}  // namespace

Fraction approx_diameter(Simulator& sim, const WeightedGraph& g, Fraction eps) {
  return approx_extremum(sim, g, eps, true);
}

Fraction approx_radius(Simulator& sim, const WeightedGraph& g, Fraction eps) {
  return approx_extremum(sim, g, eps, false);
}

FractionTable approx_apsp_scales(Simulator& sim, const WeightedGraph& g, Fraction eps) {
  require(eps.num > 0 && eps <= Fraction::whole(1), Err::InvalidInput, "eps must be in (0, 1]");
  require(g.is_connected(), Err::Disconnected, "approx_apsp_scales needs a connected graph");

  FractionTable out;
  out.sources.resize(g.n());
  for (NodeId u = 0; u < g.n(); ++u) out.sources[u] = u;
  out.values.assign(g.n(), std::vector<Fraction>(g.n(), Fraction::inf()));
  for (NodeId u = 0; u < g.n(); ++u) out.values[u][u] = Fraction::whole(0);
  if (g.n() == 1) return out;

  // Guesses 2^i cover every distance once 2^i reaches w_max * n.
  int top = ceil_log2(static_cast<std::uint64_t>(g.max_weight()) * g.n());
  for (int i = 0; i <= top; ++i) {
    Weight range = Weight{1} << i;
    CappedSweep sweep = capped_apsp(sim, g, eps, range, derive_seed(0x617073702d736bULL, i));
    for (int s = 0; s < g.n(); ++s)
      for (NodeId v = 0; v < g.n(); ++v) {
        std::int64_t d = sweep.table.values[s][v];
        if (d == kInf || d > sweep.K || s == v) continue;
        out.values[s][v] = frac_min(out.values[s][v], descale(d, eps, range, g.n()));
      }
  }
  return out;
}

FractionTable apsp_linear(Simulator& sim, const WeightedGraph& g, Fraction eps,
                          std::uint64_t seed) {
  std::vector<NodeId> sources(g.n());
  for (NodeId u = 0; u < g.n(); ++u) sources[u] = u;
  return multi_source_bounded_hop(sim, g, sources, g.n(), eps, seed).table;
}

}  // namespace congest
