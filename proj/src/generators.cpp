#include "congest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "congest/common.hpp"

namespace congest {
namespace {

Weight rand_w(Rng& rng, Weight w_max) {
  return w_max <= 1 ? 1 : static_cast<Weight>(rng.uniform(1, w_max));
}

void add_edge(std::vector<WeightedGraph::Edge>& es, std::set<std::pair<NodeId, NodeId>>& seen,
              NodeId u, NodeId v, Weight w) {
  if (u > v) std::swap(u, v);
  if (u == v || !seen.insert({u, v}).second) return;
  es.push_back({u, v, w});
}

// Row-major lattice over n nodes with the given width; connected for any n >= 1.
WeightedGraph lattice(int n, int cols, Weight w_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<WeightedGraph::Edge> es;
  for (int i = 0; i < n; ++i) {
    if (i % cols > 0) es.push_back({static_cast<NodeId>(i - 1), static_cast<NodeId>(i), rand_w(rng, w_max)});
    if (i >= cols) es.push_back({static_cast<NodeId>(i - cols), static_cast<NodeId>(i), rand_w(rng, w_max)});
  }
  return WeightedGraph(n, es);
}

}  // namespace

WeightedGraph gen_path(int n, Weight w_max, std::uint64_t seed) {
  return lattice(n, n > 0 ? n : 1, w_max, seed);
}

WeightedGraph gen_cycle(int n, Weight w_max, std::uint64_t seed) {
  require(n >= 3, Err::InvalidInput, "cycle needs at least 3 nodes");
  Rng rng(seed);
  std::vector<WeightedGraph::Edge> es;
  for (int i = 0; i + 1 < n; ++i)
    es.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), rand_w(rng, w_max)});
  es.push_back({0, static_cast<NodeId>(n - 1), rand_w(rng, w_max)});
  return WeightedGraph(n, es);
}

WeightedGraph gen_star(int n, Weight w_max, std::uint64_t seed) {
  require(n >= 2, Err::InvalidInput, "star needs at least 2 nodes");
  Rng rng(seed);
  std::vector<WeightedGraph::Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({0, static_cast<NodeId>(i), rand_w(rng, w_max)});
  return WeightedGraph(n, es);
}

WeightedGraph gen_complete(int n, Weight w_max, std::uint64_t seed) {
  require(n >= 2, Err::InvalidInput, "complete graph needs at least 2 nodes");
  Rng rng(seed);
  std::vector<WeightedGraph::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      es.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), rand_w(rng, w_max)});
  return WeightedGraph(n, es);
}

WeightedGraph gen_grid(int rows, int cols, Weight w_max, std::uint64_t seed) {
  require(rows >= 1 && cols >= 1, Err::InvalidInput, "grid dimensions must be positive");
  return lattice(rows * cols, cols, w_max, seed);
}

WeightedGraph gen_erdos_renyi(int n, double p, Weight w_max, std::uint64_t seed) {
  require(n >= 1, Err::InvalidInput, "need at least 1 node");
  require(p >= 0.0 && p <= 1.0, Err::InvalidInput, "edge probability out of range");
  Rng rng(seed);
  std::vector<WeightedGraph::Edge> es;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (int i = 1; i < n; ++i)
    add_edge(es, seen, static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(i))),
             static_cast<NodeId>(i), rand_w(rng, w_max));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) add_edge(es, seen, static_cast<NodeId>(u), static_cast<NodeId>(v), rand_w(rng, w_max));
  return WeightedGraph(n, es);
}

WeightedGraph gen_geometric(int n, double radius, Weight w_max, std::uint64_t seed) {
  require(n >= 1, Err::InvalidInput, "need at least 1 node");
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.unit();
    y[i] = rng.unit();
  }
  auto dist2 = [&](int a, int b) {
    double dx = x[a] - x[b], dy = y[a] - y[b];
    return dx * dx + dy * dy;
  };
  std::vector<WeightedGraph::Edge> es;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dist2(u, v) <= radius * radius)
        add_edge(es, seen, static_cast<NodeId>(u), static_cast<NodeId>(v), rand_w(rng, w_max));
  for (int i = 1; i < n; ++i) {  // stitch to nearest earlier node so the result is connected
    int best = 0;
    for (int j = 1; j < i; ++j)
      if (dist2(i, j) < dist2(i, best)) best = j;
    add_edge(es, seen, static_cast<NodeId>(best), static_cast<NodeId>(i), rand_w(rng, w_max));
  }
  return WeightedGraph(n, es);
}

WeightedGraph generate(const GenConfig& cfg) {
  if (cfg.family == "path") return gen_path(cfg.n, cfg.w_max, cfg.seed);
  if (cfg.family == "cycle") return gen_cycle(cfg.n, cfg.w_max, cfg.seed);
  if (cfg.family == "star") return gen_star(cfg.n, cfg.w_max, cfg.seed);
  if (cfg.family == "complete") return gen_complete(cfg.n, cfg.w_max, cfg.seed);
  if (cfg.family == "grid") {
    int rows = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(cfg.n))));
    return lattice(cfg.n, ceil_div(cfg.n, rows), cfg.w_max, cfg.seed);
  }
  if (cfg.family == "erdos_renyi") return gen_erdos_renyi(cfg.n, cfg.density, cfg.w_max, cfg.seed);
  if (cfg.family == "geometric") return gen_geometric(cfg.n, cfg.density, cfg.w_max, cfg.seed);
  fail(Err::InvalidInput, "unknown graph family: " + cfg.family);
}

}  // namespace congest
