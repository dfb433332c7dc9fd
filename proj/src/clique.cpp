#include "congest/clique.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "congest/rng.hpp"
#include "congest/rounding.hpp"

namespace congest {
namespace {

struct Phase1 {
  int k = 0;
  ShortcutSet nearest;
  std::vector<Weight> wprime;  // per edge id, symmetric
};

// Everyone ships its k lightest incident edges, one per round; afterwards
// every node can rebuild the same union graph and the same shortcut sets.
Phase1 run_phase1(Simulator& sim, const WeightedGraph& g) {
  require(g.is_complete(), Err::NotComplete, "clique algorithms need a complete graph");
  Phase1 p;
  p.k = static_cast<int>(isqrt_ceil(g.n()));
  sim.charge_rounds(p.k);
  p.nearest = shortcuts_from_union(union_k_smallest(g, p.k), p.k);
  p.wprime.resize(g.m());
  for (int e = 0; e < g.m(); ++e) p.wprime[e] = g.edge(e).w;
  for (NodeId u = 0; u < g.n(); ++u)
    for (const auto& [v, d] : p.nearest.nearest[u]) {
      const auto* a = std::lower_bound(g.adj_begin(u), g.adj_end(u), v,
                                       [](const WeightedGraph::Adj& x, NodeId y) { return x.to < y; });
      p.wprime[a->edge] = std::min(p.wprime[a->edge], d);
    }
  return p;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  std::int64_t l = a / std::gcd(a, b) * b;
  require(l > 0 && l <= (std::int64_t{1} << 40), Err::InvalidInput, "denominator blow-up");
  return l;
}

// Adjacency with parallel edges allowed; Dijkstra is indifferent to them.
using AdjList = std::vector<std::vector<std::pair<NodeId, std::int64_t>>>;

std::vector<std::int64_t> local_dijkstra(const AdjList& adj, NodeId source) {
  std::vector<std::int64_t> dist(adj.size(), kInf);
  std::priority_queue<std::pair<std::int64_t, NodeId>, std::vector<std::pair<std::int64_t, NodeId>>,
                      std::greater<>>
      pq;
  dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (auto [v, w] : adj[u])
      if (d + w < dist[v]) {
        dist[v] = d + w;
        pq.push({dist[v], v});
      }
  }
  return dist;
}

}  // namespace

CliqueSsspResult clique_sssp_exact(Simulator& sim, const WeightedGraph& g, NodeId source) {
  require(source >= 0 && source < g.n(), Err::InvalidInput, "source out of range");
  Phase1 p = run_phase1(sim, g);

  std::vector<Weight> dist(g.n(), kInf);
  dist[source] = 0;
  std::vector<Wake> init{{source, 0}};
  RunStats stats = sim.run<Weight>(g, init, [&](NodeCtx<Weight>& ctx) {
    NodeId u = ctx.node();
    bool improved = ctx.round() == 0 && u == source;
    for (const auto& env : ctx.inbox()) {
      Weight cand = sat_add(env.msg, p.wprime[env.dir >> 1]);
      if (cand < dist[u]) {
        dist[u] = cand;
        improved = true;
      }
    }
    if (improved) ctx.broadcast(dist[u]);
  });

  CliqueSsspResult out;
  out.phase2_rounds = stats.rounds;
  out.table.sources = {source};
  out.table.values = {std::move(dist)};
  return out;
}

ScaledGraph build_gu(const CliqueLocalView& view, NodeId u) {
  std::int64_t q = 1;
  for (const auto& row : view.dprime)
    for (const Fraction& f : row)
      if (!f.is_inf()) q = lcm64(q, f.den);

  std::map<std::pair<NodeId, NodeId>, std::int64_t> best;
  auto offer = [&](NodeId a, NodeId b, std::int64_t w) {
    if (a == b) return;
    auto key = std::minmax(a, b);
    auto [it, fresh] = best.emplace(std::make_pair(key.first, key.second), w);
    if (!fresh) it->second = std::min(it->second, w);
  };

  for (NodeId v = 0; v < view.n; ++v)
    if (v != u && view.wprime_row[v] < kInf) offer(u, v, view.wprime_row[v] * q);
  for (NodeId x = 0; x < view.n; ++x) {
    if (x == u) continue;
    for (const auto& [y, d] : view.nearest.nearest[x]) offer(x, y, d * q);
  }
  for (std::size_t i = 0; i < view.sampled.size(); ++i) {
    NodeId r = view.sampled[i];
    for (NodeId v = 0; v < view.n; ++v) {
      const Fraction& f = view.dprime[i][v];
      if (f.is_inf() || v == r) continue;
      offer(r, v, f.num * (q / f.den));
    }
  }

  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(best.size());
  for (const auto& [key, w] : best) edges.push_back({key.first, key.second, w});
  return {WeightedGraph(view.n, std::move(edges)), q};
}

CliqueApspResult clique_apsp_approx(Simulator& sim, const WeightedGraph& g, Fraction eps,
                                    std::uint64_t seed) {
  require(eps.num > 0 && !eps.is_inf(), Err::InvalidInput, "eps must be positive");
  Phase1 p = run_phase1(sim, g);
  int n = g.n();

  // Second half of Phase 1: shortcut sets travel (k more rounds), then each
  // node hands every tail u its tightened w'(u, v) value (one round).
  sim.charge_rounds(p.k + 1);
  std::vector<std::vector<Weight>> w_mat(n, std::vector<Weight>(n, 0));
  std::vector<std::vector<Weight>> wp_mat(n, std::vector<Weight>(n, 0));
  for (int e = 0; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    w_mat[ed.u][ed.v] = w_mat[ed.v][ed.u] = ed.w;
    wp_mat[ed.u][ed.v] = wp_mat[ed.v][ed.u] = p.wprime[e];
  }
  std::vector<std::vector<Weight>> tight = wp_mat;
  for (NodeId u = 0; u < n; ++u)
    for (const auto& [z, dz] : p.nearest.nearest[u])
      for (NodeId v = 0; v < n; ++v)
        if (v != u && v != z) tight[u][v] = std::min(tight[u][v], dz + w_mat[z][v]);

  // Phase 2: bounded-hop rows from the random sources on the reweighted
  // graph, then every node rebroadcasts its received column (|R| rounds).
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Rng rng(derive_seed(seed, 0x52));
  int r_count = std::min<std::int64_t>(n, isqrt_ceil(n) * log2_ceil_min1(n));
  for (int i = 0; i < r_count; ++i)
    std::swap(pool[i], pool[i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)))]);
  std::vector<NodeId> sampled(pool.begin(), pool.begin() + r_count);
  std::sort(sampled.begin(), sampled.end());

  std::int64_t h = 4 * isqrt_ceil(n);
  MultiSourceResult ms =
      multi_source_bounded_hop_on(sim, g, p.wprime, sampled, h, eps, derive_seed(seed, 0x6d));
  sim.charge_rounds(r_count);

  std::vector<char> in_r(n, 0);
  for (NodeId r : sampled) in_r[r] = 1;

  // Common denominator across every broadcast row, so the per-node searches
  // run on integers.
  std::int64_t q = 1;
  for (const auto& row : ms.table.values)
    for (const Fraction& f : row)
      if (!f.is_inf()) q = lcm64(q, f.den);

  CliqueApspResult out;
  out.table.sources.resize(n);
  std::iota(out.table.sources.begin(), out.table.sources.end(), 0);
  out.table.values.assign(n, {});

  // Shared edges: everyone's shortcuts plus the sampled rows; per node only
  // its own tightened row differs.
  AdjList shared(n);
  for (NodeId x = 0; x < n; ++x)
    for (const auto& [y, d] : p.nearest.nearest[x]) {
      shared[x].push_back({y, d * q});
      shared[y].push_back({x, d * q});
    }
  for (int i = 0; i < r_count; ++i) {
    NodeId r = sampled[i];
    for (NodeId v = 0; v < n; ++v) {
      const Fraction& f = ms.table.values[i][v];
      if (f.is_inf() || v == r) continue;
      std::int64_t w = f.num * (q / f.den);
      shared[r].push_back({v, w});
      shared[v].push_back({r, w});
    }
  }

  for (NodeId u = 0; u < n; ++u) {
    AdjList adj = shared;
    for (NodeId v = 0; v < n; ++v)
      if (v != u) {
        adj[u].push_back({v, tight[u][v] * q});
        adj[v].push_back({u, tight[u][v] * q});
      }
    std::vector<std::int64_t> scaled = local_dijkstra(adj, u);
    std::vector<Fraction> row(n, Fraction::inf());
    for (NodeId v = 0; v < n; ++v)
      if (scaled[v] != kInf) row[v] = reduced_128(scaled[v], q);
    out.table.values[u] = std::move(row);

    bool covered = static_cast<int>(p.nearest.nearest[u].size()) >= n - 1 || in_r[u];
    if (!covered)
      for (const auto& [z, d] : p.nearest.nearest[u]) covered |= in_r[z] != 0;
    if (!covered) out.hitting_failure = true;
  }
  return out;
}

}  // namespace congest
