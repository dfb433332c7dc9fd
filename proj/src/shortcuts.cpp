#include "congest/shortcuts.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace congest {

std::vector<std::pair<NodeId, Weight>> k_nearest(const WeightedGraph& g, NodeId u, int k) {
  require(k >= 1, Err::InvalidInput, "k must be >= 1");
  // Dijkstra popping in (dist, id) order; the first k pops after u itself
  // are exactly the k nearest under the global tie-break.
  std::vector<Weight> dist(g.n(), kInf);
  std::vector<char> done(g.n(), 0);
  dist[u] = 0;
  using Item = std::pair<Weight, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0, u});
  std::vector<std::pair<NodeId, Weight>> out;
  while (!heap.empty() && static_cast<int>(out.size()) < k) {
    auto [d, x] = heap.top();
    heap.pop();
    if (done[x]) continue;
    done[x] = 1;
    if (x != u) out.push_back({x, d});
    for (const auto* a = g.adj_begin(x); a != g.adj_end(x); ++a) {
      Weight nd = sat_add(d, a->w);
      if (nd < dist[a->to]) {
        dist[a->to] = nd;
        heap.push({nd, a->to});
      }
    }
  }
  return out;
}

std::vector<WeightedGraph::Adj> k_smallest_edges(const WeightedGraph& g, NodeId u, int k) {
  require(k >= 1, Err::InvalidInput, "k must be >= 1");
  std::vector<WeightedGraph::Adj> inc(g.adj_begin(u), g.adj_end(u));
  std::sort(inc.begin(), inc.end(), [](const WeightedGraph::Adj& a, const WeightedGraph::Adj& b) {
    return a.w != b.w ? a.w < b.w : a.to < b.to;
  });
  if (static_cast<int>(inc.size()) > k) inc.resize(k);
  return inc;
}

WeightedGraph union_k_smallest(const WeightedGraph& g, int k) {
  std::vector<char> keep(g.m(), 0);
  for (NodeId u = 0; u < g.n(); ++u) {
    for (const auto& a : k_smallest_edges(g, u, k)) keep[a.edge] = 1;
  }
  std::vector<WeightedGraph::Edge> edges;
  for (int e = 0; e < g.m(); ++e) {
    if (keep[e]) edges.push_back(g.edge(e));
  }
  return WeightedGraph(g.n(), std::move(edges));
}

ShortcutSet shortcuts_from_union(const WeightedGraph& g_union, int k) {
  ShortcutSet s;
  s.k = k;
  s.nearest.resize(g_union.n());
  for (NodeId u = 0; u < g_union.n(); ++u) s.nearest[u] = k_nearest(g_union, u, k);
  return s;
}

WeightedGraph shortcut_graph(const WeightedGraph& g, int k) {
  std::map<std::pair<NodeId, NodeId>, Weight> best;
  for (const auto& e : g.edges()) best[{e.u, e.v}] = e.w;
  for (NodeId u = 0; u < g.n(); ++u) {
    for (const auto& [v, d] : k_nearest(g, u, k)) {
      auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
      auto it = best.find(key);
      if (it == best.end() || d < it->second) best[key] = d;
    }
  }
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(best.size());
  for (const auto& [key, w] : best) edges.push_back({key.first, key.second, w});
  return WeightedGraph(g.n(), std::move(edges));
}

}  // namespace congest
