#pragma once

#include <vector>

#include "congest/graph.hpp"

namespace congest {

// Sequential reference algorithms. Everything simulated in this project is
// ultimately checked against these.

// Exact single-source distances (binary-heap Dijkstra, ties by node id).
std::vector<Weight> dijkstra(const WeightedGraph& g, NodeId source);

// Dijkstra over per-direction weights (weights may be zero but not negative).
std::vector<Weight> dijkstra_directed(const WeightedGraph& g, const AsymWeights& w, NodeId source);

// dist^h: cheapest walk using at most h edges (dynamic program over rounds).
std::vector<Weight> hop_bounded_distances(const WeightedGraph& g, NodeId source, std::int64_t h);

// Unweighted hop distances (BFS).
std::vector<Weight> bfs_hops(const WeightedGraph& g, NodeId source);

// Smallest h such that every pair has a shortest path with <= h edges,
// i.e. hop_bounded_distances(h) == dijkstra for every source.
std::int64_t shortest_path_diameter(const WeightedGraph& g);

struct EccentricityStats {
  Weight diameter = 0;      // weighted
  Weight radius = 0;        // weighted
  std::int64_t hop_diameter = 0;
};

// Weighted diameter/radius and hop diameter; requires a connected graph.
EccentricityStats eccentricity_stats(const WeightedGraph& g);

// All-pairs exact distances, one Dijkstra per source.
DistanceTable all_pairs_dijkstra(const WeightedGraph& g);

}  // namespace congest
