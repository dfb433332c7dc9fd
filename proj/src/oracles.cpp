#include "congest/oracles.hpp"

#include <algorithm>
#include <queue>

namespace congest {

namespace {

// (dist, node) min-heap; the id component makes pop order deterministic.
using HeapItem = std::pair<Weight, NodeId>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>>;

}  // namespace

std::vector<Weight> dijkstra(const WeightedGraph& g, NodeId source) {
  std::vector<Weight> dist(g.n(), kInf);
  dist[source] = 0;
  MinHeap heap;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (const auto* a = g.adj_begin(u); a != g.adj_end(u); ++a) {
      Weight nd = sat_add(d, a->w);
      if (nd < dist[a->to]) {
        dist[a->to] = nd;
        heap.push({nd, a->to});
      }
    }
  }
  return dist;
}

std::vector<Weight> dijkstra_directed(const WeightedGraph& g, const AsymWeights& w, NodeId source) {
  std::vector<Weight> dist(g.n(), kInf);
  dist[source] = 0;
  MinHeap heap;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (const auto* a = g.adj_begin(u); a != g.adj_end(u); ++a) {
      Weight nd = sat_add(d, w(a->dir));
      if (nd < dist[a->to]) {
        dist[a->to] = nd;
        heap.push({nd, a->to});
      }
    }
  }
  return dist;
}

std::vector<Weight> hop_bounded_distances(const WeightedGraph& g, NodeId source, std::int64_t h) {
  std::vector<Weight> cur(g.n(), kInf);
  cur[source] = 0;
  std::vector<Weight> next(g.n());
  for (std::int64_t r = 0; r < h; ++r) {
    next = cur;
    bool changed = false;
    for (const auto& e : g.edges()) {
      Weight a = sat_add(cur[e.u], e.w);
      if (a < next[e.v]) {
        next[e.v] = a;
        changed = true;
      }
      Weight b = sat_add(cur[e.v], e.w);
      if (b < next[e.u]) {
        next[e.u] = b;
        changed = true;
      }
    }
    cur.swap(next);
    if (!changed) break;  // fixpoint: further rounds cannot improve
  }
  return cur;
}

std::vector<Weight> bfs_hops(const WeightedGraph& g, NodeId source) {
  std::vector<Weight> hops(g.n(), kInf);
  hops[source] = 0;
  std::queue<NodeId> q;
  q.push(source);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (const auto* a = g.adj_begin(u); a != g.adj_end(u); ++a) {
      if (hops[a->to] == kInf) {
        hops[a->to] = hops[u] + 1;
        q.push(a->to);
      }
    }
  }
  return hops;
}

std::int64_t shortest_path_diameter(const WeightedGraph& g) {
  require(g.is_connected(), Err::Disconnected, "shortest_path_diameter needs a connected graph");
  // For each source: Dijkstra, then fewest-hops-among-shortest-paths via a
  // DP over the shortest-path DAG in (dist, id) order.
  std::int64_t spd = 0;
  std::vector<std::pair<Weight, NodeId>> order(g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    std::vector<Weight> dist = dijkstra(g, s);
    for (NodeId v = 0; v < g.n(); ++v) order[v] = {dist[v], v};
    std::sort(order.begin(), order.end());
    std::vector<std::int64_t> minhop(g.n(), kInf);
    minhop[s] = 0;
    for (auto [d, v] : order) {
      if (v == s) continue;
      for (const auto* a = g.adj_begin(v); a != g.adj_end(v); ++a) {
        if (dist[a->to] != kInf && sat_add(dist[a->to], a->w) == d) {
          minhop[v] = std::min(minhop[v], minhop[a->to] + 1);
        }
      }
      spd = std::max(spd, minhop[v]);
    }
  }
  return spd;
}

EccentricityStats eccentricity_stats(const WeightedGraph& g) {
  require(g.is_connected(), Err::Disconnected, "eccentricity_stats needs a connected graph");
  EccentricityStats st;
  st.radius = kInf;
  for (NodeId s = 0; s < g.n(); ++s) {
    std::vector<Weight> dist = dijkstra(g, s);
    Weight ecc = 0;
    for (Weight d : dist) ecc = std::max(ecc, d);
    st.diameter = std::max(st.diameter, ecc);
    st.radius = std::min(st.radius, ecc);
    std::vector<Weight> hops = bfs_hops(g, s);
    for (Weight h : hops) st.hop_diameter = std::max<std::int64_t>(st.hop_diameter, h);
  }
  return st;
}

DistanceTable all_pairs_dijkstra(const WeightedGraph& g) {
  DistanceTable t;
  t.sources.resize(g.n());
  t.values.resize(g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    t.sources[s] = s;
    t.values[s] = dijkstra(g, s);
  }
  return t;
}

}  // namespace congest
