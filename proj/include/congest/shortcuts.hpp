#pragma once

#include <vector>

#include "congest/graph.hpp"

namespace congest {

// S_k(u): the k nodes closest to u (excluding u), with their exact distances.
// Ties broken by ascending node id everywhere.
struct ShortcutSet {
  int k = 0;
  // Per node: up to k (node, distance) pairs ordered by (distance, id).
  std::vector<std::vector<std::pair<NodeId, Weight>>> nearest;
};

// Dijkstra from u, keep the first min(k, n-1) reachable nodes.
std::vector<std::pair<NodeId, Weight>> k_nearest(const WeightedGraph& g, NodeId u, int k);

// E_k(u): the min(k, deg(u)) lightest incident edges, ties by neighbor id.
std::vector<WeightedGraph::Adj> k_smallest_edges(const WeightedGraph& g, NodeId u, int k);

// The union of everyone's E_k as a standalone graph.
WeightedGraph union_k_smallest(const WeightedGraph& g, int k);

// k-nearest sets computed on union_k_smallest(g, k); equals k_nearest on g
// with identical distances, which is what makes the local computation sound.
ShortcutSet shortcuts_from_union(const WeightedGraph& g_union, int k);

// g plus an edge (u, v, dist(u,v)) for every v in S_k(u); parallel edges
// collapse to the smaller weight. Preserves all distances and shrinks the
// shortest-path diameter below 4n/k.
WeightedGraph shortcut_graph(const WeightedGraph& g, int k);

}  // namespace congest
