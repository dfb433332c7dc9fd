#include "congest/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "congest/bfs_tree.hpp"
#include "congest/rng.hpp"

namespace congest {

Fraction default_eps(int n) {
  std::int64_t q = std::max<std::int64_t>(2, ceil_log2(static_cast<std::uint64_t>(std::max(n, 1))));
  return Fraction(1, q);
}

Weight ScaleFamily::scaled(Weight w, int scale) const {
  __int128 numer = static_cast<__int128>(2) * h * w * eps.den;
  __int128 denom = static_cast<__int128>(eps.num) << scale;
  __int128 r = (numer + denom - 1) / denom;
  require(r >= 1 && r < kInf, Err::InvalidInput, "scaled weight out of range");
  return static_cast<Weight>(r);
}

Fraction ScaleFamily::factor(int scale) const {
  return reduced_128(static_cast<__int128>(eps.num) << scale, static_cast<__int128>(eps.den) * 2 * h);
}

Fraction ScaleFamily::value(std::int64_t d, int scale) const {
  return reduced_128((static_cast<__int128>(eps.num) << scale) * d,
                     static_cast<__int128>(eps.den) * 2 * h);
}

ScaleFamily make_scale_family(std::int64_t h, Fraction eps, Weight w_max) {
  require(h >= 1, Err::InvalidInput, "hop bound must be >= 1");
  require(eps.num >= 1 && eps.den >= 1, Err::InvalidInput, "eps must be positive");
  ScaleFamily f;
  f.eps = eps;
  f.h = h;
  f.w_max = std::max<Weight>(w_max, 1);
  f.K = ceil_div(h * (eps.num + 2 * eps.den), eps.num);
  f.num_scales = ceil_log2(static_cast<std::uint64_t>(h) * static_cast<std::uint64_t>(f.w_max)) + 1;
  return f;
}

ScaleFamily make_scale_family(const WeightedGraph& g, std::int64_t h, Fraction eps) {
  return make_scale_family(h, eps, g.max_weight());
}

namespace {

struct BhMsg {
  std::int32_t src;
  std::int32_t scale;
  std::int64_t dist;
};

struct BhSpec {
  std::vector<NodeId> sources;
  std::vector<std::int64_t> delays;
  std::int64_t K = 0;
  std::vector<std::vector<Weight>> scale_w;  // [scale][undirected edge]
  const ScaleFamily* family = nullptr;       // set in fraction-folding mode
};

struct BhState {
  std::vector<std::int64_t> cur;       // current-scale clipped distance
  std::vector<std::int32_t> cur_scale;
  std::vector<Fraction> best;
  std::vector<std::int32_t> bcasts;
  RunStats stats;
};

BhState run_bounded(Simulator& sim, const WeightedGraph& g, const BhSpec& spec) {
  const int n = g.n();
  const int k = static_cast<int>(spec.sources.size());
  const int num_scales = static_cast<int>(spec.scale_w.size());
  const std::int64_t window = spec.K + 1;
  const bool fold = spec.family != nullptr;

  BhState st;
  st.cur.assign(static_cast<std::size_t>(n) * k, kInf);
  st.cur_scale.assign(static_cast<std::size_t>(n) * k, -1);
  if (fold) st.best.assign(static_cast<std::size_t>(n) * k, Fraction::inf());
  st.bcasts.assign(static_cast<std::size_t>(n) * k, 0);

  std::vector<std::int32_t> src_at(n, -1);
  for (int j = 0; j < k; ++j) {
    require(src_at[spec.sources[j]] < 0, Err::InvalidInput, "duplicate source");
    src_at[spec.sources[j]] = j;
  }

  auto idx = [k](NodeId u, int j) { return static_cast<std::size_t>(u) * k + j; };
  auto fold_to = [&](std::size_t id, std::int32_t target) {
    if (fold && st.cur_scale[id] >= 0 && st.cur[id] <= spec.K) {
      Fraction v = spec.family->value(st.cur[id], st.cur_scale[id]);
      if (v < st.best[id]) st.best[id] = v;
    }
    st.cur[id] = kInf;
    st.cur_scale[id] = target;
  };

  using Agenda = std::priority_queue<std::pair<std::int64_t, std::int32_t>,
                                     std::vector<std::pair<std::int64_t, std::int32_t>>, std::greater<>>;
  std::vector<Agenda> agenda(n);

  auto step = [&](NodeCtx<BhMsg>& ctx) {
    NodeId u = ctx.node();
    std::int64_t r = ctx.round();
    auto fire = [&](std::int32_t j, std::int32_t scale, std::size_t id) {
      ctx.broadcast({j, scale, st.cur[id]});
      ++st.bcasts[id];
    };

    // A source opens each of its scale windows with distance 0.
    if (std::int32_t j = src_at[u]; j >= 0) {
      std::int64_t rel = r - spec.delays[j];
      if (rel >= 0 && rel % window == 0) {
        std::int64_t scale = rel / window;
        if (scale < num_scales) {
          std::size_t id = idx(u, j);
          fold_to(id, static_cast<std::int32_t>(scale));
          st.cur[id] = 0;
          fire(j, static_cast<std::int32_t>(scale), id);
        }
      }
    }

    for (const auto& env : ctx.inbox()) {
      std::int32_t j = env.msg.src;
      std::int32_t scale = env.msg.scale;
      std::size_t id = idx(u, j);
      if (scale < st.cur_scale[id]) continue;  // stale window boundary
      std::int64_t nd = env.msg.dist + spec.scale_w[scale][env.dir >> 1];
      if (nd > spec.K) continue;
      if (st.cur_scale[id] < scale) fold_to(id, scale);
      if (nd < st.cur[id]) {
        st.cur[id] = nd;
        std::int64_t when = spec.delays[j] + scale * window + nd;
        if (when == r) {
          fire(j, scale, id);
        } else {
          agenda[u].push({when, j});
          ctx.wake_at(when);
        }
      }
    }

    while (!agenda[u].empty() && agenda[u].top().first == r) {
      std::int32_t j = agenda[u].top().second;
      agenda[u].pop();
      std::int64_t rel = r - spec.delays[j];
      std::int64_t scale = rel / window;
      std::size_t id = idx(u, j);
      if (scale < num_scales && st.cur_scale[id] == scale && st.cur[id] == rel % window) {
        fire(j, static_cast<std::int32_t>(scale), id);
      }
    }
  };

  std::vector<Wake> init;
  init.reserve(static_cast<std::size_t>(k) * num_scales);
  for (int j = 0; j < k; ++j) {
    for (int s = 0; s < num_scales; ++s) init.push_back({spec.sources[j], spec.delays[j] + s * window});
  }
  st.stats = sim.run<BhMsg>(g, init, step);

  if (fold) {
    for (std::size_t id = 0; id < st.cur.size(); ++id) fold_to(id, num_scales);
  }
  return st;
}

std::vector<std::vector<Weight>> scale_all(const std::vector<Weight>& base, const ScaleFamily& fam) {
  std::vector<std::vector<Weight>> out(fam.num_scales);
  for (int s = 0; s < fam.num_scales; ++s) {
    out[s].resize(base.size());
    for (std::size_t e = 0; e < base.size(); ++e) out[s][e] = fam.scaled(base[e], s);
  }
  return out;
}

std::vector<Weight> base_weights(const WeightedGraph& g) {
  std::vector<Weight> w(g.m());
  for (int e = 0; e < g.m(); ++e) w[e] = g.edge(e).w;
  return w;
}

// Random start offsets, made global before the run starts.
std::vector<std::int64_t> random_delays(Simulator& sim, const WeightedGraph& g,
                                        const std::vector<NodeId>& sources, std::uint64_t seed) {
  std::int64_t k = static_cast<std::int64_t>(sources.size());
  std::int64_t hi = static_cast<std::int64_t>(
      std::ceil(static_cast<double>(k) * std::log2(static_cast<double>(g.n())) - 1e-9));
  if (hi < 0) hi = 0;
  Rng rng(derive_seed(seed, 0x64656c6179ULL));
  std::vector<std::int64_t> delays(sources.size());
  for (auto& d : delays) d = rng.uniform(0, hi);

  if (g.n() > 1) {
    BfsTree tree = build_bfs_tree(sim, g, 0);
    std::vector<BroadcastItem> items(sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j)
      items[j] = {sources[j], {delays[j], 0, 0}};
    broadcast_all(sim, g, tree, std::move(items));
  }
  return delays;
}

MultiSourceResult fold_result(const WeightedGraph& g, const BhSpec& spec, const BhState& st) {
  MultiSourceResult res;
  res.table.sources = spec.sources;
  const int k = static_cast<int>(spec.sources.size());
  res.table.values.assign(k, std::vector<Fraction>(g.n(), Fraction::inf()));
  for (NodeId u = 0; u < g.n(); ++u) {
    for (int j = 0; j < k; ++j) {
      res.table.values[j][u] = st.best[static_cast<std::size_t>(u) * k + j];
      res.max_broadcasts_per_source =
          std::max<std::int64_t>(res.max_broadcasts_per_source, st.bcasts[static_cast<std::size_t>(u) * k + j]);
    }
  }
  res.stats = st.stats;
  return res;
}

}  // namespace

MultiSourceResult bounded_hop_sssp(Simulator& sim, const WeightedGraph& g, NodeId source,
                                   std::int64_t h, Fraction eps) {
  ScaleFamily fam = make_scale_family(g, h, eps);
  BhSpec spec;
  spec.sources = {source};
  spec.delays = {0};
  spec.K = fam.K;
  spec.scale_w = scale_all(base_weights(g), fam);
  spec.family = &fam;
  BhState st = run_bounded(sim, g, spec);
  return fold_result(g, spec, st);
}

MultiSourceResult multi_source_bounded_hop_on(Simulator& sim, const WeightedGraph& g,
                                              const std::vector<Weight>& edge_weights,
                                              std::vector<NodeId> sources, std::int64_t h,
                                              Fraction eps, std::uint64_t seed) {
  require(!sources.empty(), Err::InvalidInput, "need at least one source");
  Weight w_max = 1;
  for (Weight w : edge_weights) w_max = std::max(w_max, w);
  ScaleFamily fam = make_scale_family(h, eps, w_max);
  BhSpec spec;
  spec.sources = std::move(sources);
  spec.delays = random_delays(sim, g, spec.sources, seed);
  spec.K = fam.K;
  spec.scale_w = scale_all(edge_weights, fam);
  spec.family = &fam;
  BhState st = run_bounded(sim, g, spec);
  return fold_result(g, spec, st);
}

MultiSourceResult multi_source_bounded_hop(Simulator& sim, const WeightedGraph& g,
                                           std::vector<NodeId> sources, std::int64_t h, Fraction eps,
                                           std::uint64_t seed) {
  return multi_source_bounded_hop_on(sim, g, base_weights(g), std::move(sources), h, eps, seed);
}

DistanceTable bounded_distance_sssp(Simulator& sim, const WeightedGraph& g, NodeId source,
                                    std::int64_t K) {
  BhSpec spec;
  spec.sources = {source};
  spec.delays = {0};
  spec.K = K;
  spec.scale_w = {base_weights(g)};
  BhState st = run_bounded(sim, g, spec);
  DistanceTable t;
  t.sources = spec.sources;
  t.values.assign(1, std::vector<Weight>(g.n(), kInf));
  for (NodeId u = 0; u < g.n(); ++u) {
    if (st.cur_scale[u] == 0 && st.cur[u] <= K) t.values[0][u] = st.cur[u];
  }
  return t;
}

DistanceTable bounded_distance_apsp(Simulator& sim, const WeightedGraph& g,
                                    const std::vector<Weight>& edge_weights, std::int64_t K,
                                    std::uint64_t seed) {
  BhSpec spec;
  spec.sources.resize(g.n());
  for (NodeId u = 0; u < g.n(); ++u) spec.sources[u] = u;
  spec.delays = random_delays(sim, g, spec.sources, seed);
  spec.K = K;
  spec.scale_w = {edge_weights};
  BhState st = run_bounded(sim, g, spec);
  DistanceTable t;
  t.sources = spec.sources;
  t.values.assign(g.n(), std::vector<Weight>(g.n(), kInf));
  const int k = g.n();
  for (NodeId u = 0; u < g.n(); ++u) {
    for (int j = 0; j < k; ++j) {
      std::size_t id = static_cast<std::size_t>(u) * k + j;
      if (st.cur_scale[id] == 0 && st.cur[id] <= K) t.values[j][u] = st.cur[id];
    }
  }
  return t;
}

}  // namespace congest
