#include "congest/scaling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "congest/bfs_tree.hpp"
#include "congest/oracles.hpp"
#include "congest/rng.hpp"

namespace congest {
namespace {

// Union-find, sizes tracked.
struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

std::int64_t max_zero_component(const WeightedGraph& g, const std::vector<Weight>& w) {
  Dsu dsu(g.n());
  for (int e = 0; e < g.m(); ++e)
    if (w[e] == 0) dsu.unite(g.edge(e).u, g.edge(e).v);
  std::int64_t best = 1;
  for (NodeId u = 0; u < g.n(); ++u) best = std::max<std::int64_t>(best, dsu.size[dsu.find(u)]);
  return best;
}

std::vector<Weight> weights_from_digits(const std::vector<PositiveBinary>& digs, int i) {
  std::vector<Weight> w(digs.size(), 0);
  for (std::size_t e = 0; e < digs.size(); ++e) {
    const auto& d = digs[e].digits;
    Weight v = 0;
    for (int j = static_cast<int>(d.size()) - 1; j >= i; --j) v = 2 * v + d[j];
    w[e] = v;
  }
  return w;
}

AsymWeights family_on_pruned(const PrunedGraph& pruned, const MultiWeightFamily& family,
                             NodeId s) {
  AsymWeights out;
  out.w.resize(2 * static_cast<std::size_t>(pruned.h.m()));
  for (int e = 0; e < pruned.h.m(); ++e) {
    out.w[2 * e] = family.per_source[s].w[2 * pruned.orig_edge[e]];
    out.w[2 * e + 1] = family.per_source[s].w[2 * pruned.orig_edge[e] + 1];
  }
  return out;
}

// The charged "everything to one node" rescue: ship the edge tables up, solve
// locally, ship all rows back.
MultiWeightResult aggregate_fallback(Simulator& sim, const PrunedGraph& pruned,
                                     const MultiWeightFamily& family, std::int64_t K) {
  const WeightedGraph& h = pruned.h;
  std::int64_t n = h.n();
  sim.charge_rounds(h.m() + n * n + 2 * n);
  MultiWeightResult out;
  out.congestion_fallback = true;
  out.table.sources.resize(n);
  std::iota(out.table.sources.begin(), out.table.sources.end(), 0);
  out.table.values.resize(n);
  for (NodeId s = 0; s < n; ++s) {
    std::vector<Weight> d = dijkstra_directed(h, family_on_pruned(pruned, family, s), s);
    for (Weight& v : d)
      if (v > K) v = kInf;
    out.table.values[s] = std::move(d);
  }
  return out;
}

}  // namespace

PositiveBinary positive_binary(std::int64_t x) {
  require(x >= 1, Err::InvalidInput, "positive binary needs x >= 1");
  PositiveBinary b;
  while (x > 0) {
    int d = (x % 2 == 1) ? 1 : 2;
    b.digits.push_back(d);
    x = (x - d) / 2;
  }
  return b;
}

std::int64_t positive_binary_value(const PositiveBinary& b) {
  std::int64_t v = 0;
  for (int j = static_cast<int>(b.digits.size()) - 1; j >= 0; --j) v = 2 * v + b.digits[j];
  return v;
}

std::vector<Weight> scale_weights(const WeightedGraph& g, int i) {
  require(i >= 0, Err::InvalidInput, "scale index must be >= 0");
  std::vector<PositiveBinary> digs;
  digs.reserve(g.m());
  for (int e = 0; e < g.m(); ++e) digs.push_back(positive_binary(g.edge(e).w));
  return weights_from_digits(digs, i);
}

int scale_count(const WeightedGraph& g) {
  int top = 1;
  for (int e = 0; e < g.m(); ++e)
    top = std::max(top, static_cast<int>(positive_binary(g.edge(e).w).digits.size()));
  return top;
}

MultiWeightFamily reweight_per_source(Simulator& sim, const WeightedGraph& g,
                                      const std::vector<Weight>& w_i,
                                      const DistanceTable& dist_prev) {
  require(static_cast<int>(w_i.size()) == g.m(), Err::InvalidInput, "weight table size mismatch");
  require(static_cast<int>(dist_prev.values.size()) == g.n(), Err::InvalidInput,
          "need one previous row per source");
  // Each node hands its neighbors its n previous distances, one per round.
  sim.charge_rounds(g.n());

  MultiWeightFamily fam;
  fam.per_source.resize(g.n());
  fam.ecc_bound = 2 * static_cast<std::int64_t>(g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    const std::vector<Weight>& d = dist_prev.values[s];
    AsymWeights& w = fam.per_source[s];
    w.w.resize(2 * static_cast<std::size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) {
      const auto& ed = g.edge(e);
      Weight fwd = 2 * d[ed.u] - 2 * d[ed.v] + w_i[e];
      Weight rev = 2 * d[ed.v] - 2 * d[ed.u] + w_i[e];
      require(fwd >= 0 && rev >= 0, Err::InvalidInput, "reweighting went negative");
      w.w[2 * e] = fwd;
      w.w[2 * e + 1] = rev;
    }
  }
  fam.zero_bound = max_zero_component(g, w_i);
  return fam;
}

ClusterPartition cluster_zero_components(Simulator& sim, const WeightedGraph& g,
                                         const std::vector<Weight>& w_i) {
  require(static_cast<int>(w_i.size()) == g.m(), Err::InvalidInput, "weight table size mismatch");
  // Minimum-id flood along zero edges only.
  std::vector<NodeId> best(g.n());
  std::iota(best.begin(), best.end(), 0);
  sim.run_all_at_zero<std::int64_t>(g, [&](NodeCtx<std::int64_t>& ctx) {
    NodeId u = ctx.node();
    bool improved = ctx.round() == 0;
    for (const auto& env : ctx.inbox())
      if (env.msg < best[u]) {
        best[u] = static_cast<NodeId>(env.msg);
        improved = true;
      }
    if (!improved) return;
    for (const auto* a = g.adj_begin(u); a != g.adj_end(u); ++a)
      if (w_i[a->edge] == 0) ctx.send_adj(*a, best[u]);
  });

  // Every node announces (itself, its representative) so the partition is
  // common knowledge.
  BfsTree tree = build_bfs_tree(sim, g, 0);
  std::vector<BroadcastItem> items(g.n());
  for (NodeId u = 0; u < g.n(); ++u) items[u] = {u, {u, best[u], 0}};
  broadcast_all(sim, g, tree, items);

  ClusterPartition part;
  part.cluster.assign(g.n(), -1);
  std::vector<NodeId> reps(best);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  part.count = static_cast<int>(reps.size());
  part.rep = reps;
  part.size.assign(part.count, 0);
  for (NodeId u = 0; u < g.n(); ++u) {
    int c = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), best[u]) - reps.begin());
    part.cluster[u] = c;
    ++part.size[c];
  }
  return part;
}

PrunedGraph prune_big_clusters(const WeightedGraph& g, const ClusterPartition& part) {
  std::int64_t threshold = isqrt_ceil(g.n());
  PrunedGraph out;
  std::vector<WeightedGraph::Edge> edges;
  for (int e = 0; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    int cu = part.cluster[ed.u];
    if (cu == part.cluster[ed.v] && part.size[cu] > threshold) continue;
    edges.push_back(ed);
    out.orig_edge.push_back(e);
  }
  out.h = WeightedGraph(g.n(), std::move(edges));
  return out;
}

MultiWeightResult multi_weight_k_apsp(Simulator& sim, const PrunedGraph& pruned,
                                      const MultiWeightFamily& family, std::int64_t K,
                                      std::uint64_t seed, const MultiWeightOptions& opts) {
  const WeightedGraph& h = pruned.h;
  const int n = h.n();
  require(static_cast<int>(family.per_source.size()) == n, Err::InvalidInput,
          "family must cover every source");
  require(K >= 0, Err::InvalidInput, "K must be >= 0");
  if (opts.force_fallback) return aggregate_fallback(sim, pruned, family, K);

  // Zero pattern is source-independent; measure the spacing bound on it.
  std::vector<Weight> w0(h.m());
  for (int e = 0; e < h.m(); ++e) w0[e] = family.per_source[0].w[2 * pruned.orig_edge[e]];
  const std::int64_t zb = max_zero_component(h, w0);
  const std::int64_t slack = opts.slack > 0 ? opts.slack : log2_ceil_min1(n);
  const std::int64_t spacing = zb * slack;

  // Start offsets, drawn once and made global (charged tree broadcast).
  Rng rng(seed);
  std::vector<std::int64_t> delay(n);
  for (NodeId s = 0; s < n; ++s) delay[s] = static_cast<std::int64_t>(rng.below(n));
  sim.charge_rounds(3 * n);

  struct Msg {
    NodeId src;
    std::int64_t val;
  };
  struct Due {
    NodeId src;
    std::int64_t val;
    std::int32_t adj_idx;
  };
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, kInf));
  std::vector<std::map<std::int64_t, std::vector<Due>>> agenda(n);

  std::vector<Wake> init(n);
  for (NodeId s = 0; s < n; ++s) init[s] = {s, delay[s]};

  auto step = [&](NodeCtx<Msg>& ctx) {
    NodeId u = ctx.node();
    std::int64_t t = ctx.round();
    const auto* adj = h.adj_begin(u);
    int deg = h.degree(u);

    std::vector<std::pair<NodeId, std::int64_t>> fresh;
    if (u < n && t == delay[u] && dist[u][u] == kInf) fresh.push_back({u, 0});
    for (const auto& env : ctx.inbox()) {
      if (dist[u][env.msg.src] != kInf) continue;
      bool seen = false;
      for (auto& f : fresh)
        if (f.first == env.msg.src) {
          f.second = std::min(f.second, env.msg.val);
          seen = true;
        }
      if (!seen) fresh.push_back({env.msg.src, env.msg.val});
    }

    for (auto [s, l] : fresh) {
      dist[u][s] = l;
      for (int a = 0; a < deg; ++a) {
        Weight w = family.per_source[s].w[2 * pruned.orig_edge[adj[a].edge] + (adj[a].dir & 1)];
        if (w == 0) {
          ctx.send_adj(adj[a], {s, l});
        } else if (l + w <= K) {
          std::int64_t when = delay[s] + (l + w) * spacing;
          if (when <= t)
            ctx.send_adj(adj[a], {s, l + w});
          else {
            agenda[u][when].push_back({s, l + w, a});
            ctx.wake_at(when);
          }
        }
      }
    }

    auto it = agenda[u].find(t);
    if (it != agenda[u].end()) {
      for (const Due& d : it->second) ctx.send_adj(adj[d.adj_idx], {d.src, d.val});
      agenda[u].erase(it);
    }
  };

  SimConfig saved = sim.config;
  auto saved_failure = sim.trace.failure;
  sim.trace.failure.reset();
  sim.config.policy = CapacityPolicy::FailFast;
  sim.config.edge_capacity = log2_ceil_min1(n);
  bool tripped = false;
  try {
    sim.run<Msg>(h, init, step);
  } catch (const Error& e) {
    if (e.code() != Err::CapacityExceeded) {
      sim.config = saved;
      throw;
    }
    tripped = true;
  }
  sim.config = saved;
  if (saved_failure) sim.trace.failure = saved_failure;
  if (tripped) return aggregate_fallback(sim, pruned, family, K);

  MultiWeightResult out;
  out.table.sources.resize(n);
  std::iota(out.table.sources.begin(), out.table.sources.end(), 0);
  out.table.values.assign(n, std::vector<Weight>(n, kInf));
  for (NodeId u = 0; u < n; ++u)
    for (NodeId s = 0; s < n; ++s) out.table.values[s][u] = dist[u][s];
  return out;
}

DistanceTable candidate_distances(const DistanceTable& dist_prev, const DistanceTable& capped) {
  require(dist_prev.values.size() == capped.values.size(), Err::InvalidInput,
          "tables cover different source sets");
  DistanceTable out;
  out.sources = capped.sources;
  out.values.resize(capped.values.size());
  for (std::size_t s = 0; s < capped.values.size(); ++s) {
    const auto& prev = dist_prev.values[s];
    const auto& cap = capped.values[s];
    out.values[s].resize(cap.size());
    for (std::size_t u = 0; u < cap.size(); ++u)
      out.values[s][u] = (cap[u] == kInf || prev[u] == kInf) ? kInf : 2 * prev[u] + cap[u];
  }
  return out;
}

std::vector<std::vector<Weight>> aggregate_clusters(const ClusterPartition& part,
                                                    const DistanceTable& dprime) {
  std::vector<std::vector<Weight>> cd(part.count, std::vector<Weight>(part.count, kInf));
  for (std::size_t s = 0; s < dprime.values.size(); ++s) {
    int a = part.cluster[dprime.sources[s]];
    for (std::size_t u = 0; u < dprime.values[s].size(); ++u) {
      int b = part.cluster[static_cast<NodeId>(u)];
      Weight v = dprime.values[s][u];
      if (v < cd[a][b]) cd[a][b] = cd[b][a] = v;
    }
  }
  return cd;
}

std::vector<Weight> cluster_graph_complete(NodeId u, const ClusterPartition& part,
                                           const std::vector<std::vector<Weight>>& cluster_dprime,
                                           const std::vector<char>& big) {
  const int count = part.count;
  const int cu = part.cluster[u];
  std::vector<std::vector<std::pair<int, Weight>>> adj(count);
  auto join = [&](int a, int b, Weight w) {
    if (a == b || w == kInf) return;
    adj[a].push_back({b, w});
    adj[b].push_back({a, w});
  };
  for (int j = 0; j < count; ++j) join(cu, j, cluster_dprime[cu][j]);
  for (int b = 0; b < count; ++b)
    if (big[b])
      for (int j = 0; j < count; ++j) join(b, j, cluster_dprime[b][j]);

  std::vector<Weight> dc(count, kInf);
  std::priority_queue<std::pair<Weight, int>, std::vector<std::pair<Weight, int>>, std::greater<>>
      pq;
  dc[cu] = 0;
  pq.push({0, cu});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d != dc[x]) continue;
    for (auto [y, w] : adj[x])
      if (sat_add(d, w) < dc[y]) {
        dc[y] = d + w;
        pq.push({dc[y], y});
      }
  }
  std::vector<Weight> out(part.cluster.size());
  for (std::size_t v = 0; v < part.cluster.size(); ++v) out[v] = dc[part.cluster[v]];
  return out;
}

ExactApspResult exact_apsp(Simulator& sim, const WeightedGraph& g, std::uint64_t seed,
                           const ExactApspOptions& opts) {
  require(g.is_connected(), Err::Disconnected, "exact apsp needs a connected graph");
  const int n = g.n();
  const std::int64_t threshold = isqrt_ceil(n);

  ExactApspResult out;
  out.table.sources.resize(n);
  std::iota(out.table.sources.begin(), out.table.sources.end(), 0);
  out.table.values.assign(n, std::vector<Weight>(n, 0));
  if (g.m() == 0) return out;

  std::vector<PositiveBinary> digs;
  digs.reserve(g.m());
  for (int e = 0; e < g.m(); ++e) digs.push_back(positive_binary(g.edge(e).w));

  for (int i = scale_count(g) - 1; i >= 0; --i) {
    std::vector<Weight> w_i = weights_from_digits(digs, i);
    MultiWeightFamily family = reweight_per_source(sim, g, w_i, out.table);
    ClusterPartition part = cluster_zero_components(sim, g, w_i);
    PrunedGraph pruned = prune_big_clusters(g, part);
    MultiWeightResult mw =
        multi_weight_k_apsp(sim, pruned, family, 2 * static_cast<std::int64_t>(n),
                            derive_seed(seed, static_cast<std::uint64_t>(i)),
                            {opts.slack, opts.force_fallback});
    DistanceTable dprime = candidate_distances(out.table, mw.table);
    std::vector<std::vector<Weight>> cd = aggregate_clusters(part, dprime);
    std::vector<char> big(part.count, 0);
    std::int64_t big_count = 0;
    for (int c = 0; c < part.count; ++c)
      if (part.size[c] > threshold) {
        big[c] = 1;
        ++big_count;
      }
    // Big-cluster rows go global; small rows travel only inside their own
    // cluster. Both phases are pipelined tree traffic.
    sim.charge_rounds(2 * n + big_count * part.count + part.count);

    IterationReport rep;
    rep.scale = i;
    rep.fallback = mw.congestion_fallback;
    out.any_fallback |= mw.congestion_fallback;

    std::vector<std::vector<Weight>> by_cluster(part.count);
    for (int c = 0; c < part.count; ++c)
      by_cluster[c] = cluster_graph_complete(part.rep[c], part, cd, big);
    for (NodeId u = 0; u < n; ++u) {
      const std::vector<Weight>& row = by_cluster[part.cluster[u]];
      for (NodeId v = 0; v < n; ++v) {
        require(row[v] != kInf, Err::InvalidInput, "completion left a pair unresolved");
        out.table.values[u][v] = row[v];
      }
    }

    if (opts.collect_invariants) {
      std::vector<Weight> w_next = weights_from_digits(digs, i + 1);
      for (int e = 0; e < g.m(); ++e) {
        int b = i < static_cast<int>(digs[e].digits.size()) ? digs[e].digits[i] : 0;
        if (w_i[e] != 2 * w_next[e] + b) rep.recurrence_ok = false;
        for (NodeId s = 0; s < n; ++s) {
          Weight fwd = family.per_source[s].w[2 * e];
          Weight rev = family.per_source[s].w[2 * e + 1];
          if (fwd < 0 || rev < 0) rep.vec_nonneg = false;
          if ((fwd == 0) != (w_i[e] == 0) || (rev == 0) != (w_i[e] == 0)) rep.zero_equiv = false;
        }
      }
      for (NodeId s = 0; s < n; ++s) {
        std::vector<Weight> d = dijkstra_directed(g, family.per_source[s], s);
        for (Weight v : d)
          if (v != kInf) rep.max_vec_ecc = std::max(rep.max_vec_ecc, v);
      }
      std::vector<Weight> hw(pruned.h.m());
      for (int e = 0; e < pruned.h.m(); ++e) hw[e] = w_i[pruned.orig_edge[e]];
      rep.zero_h = max_zero_component(pruned.h, hw);
    }
    out.iterations.push_back(rep);
  }
  return out;
}

}  // namespace congest
