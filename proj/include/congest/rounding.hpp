#pragma once

#include <vector>

#include "congest/fraction.hpp"
#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

// Default approximation parameter: 1 / max(2, ceil(log2 n)).
Fraction default_eps(int n);

// Geometric family of rounded weight functions. Scale i targets distance
// range D'_i = 2^i and rounds each weight to ceil(2h*w / (eps*D'_i)); a
// search limited to rounded distance K = ceil((1+2/eps)*h) then recovers
// h-hop distances up to a factor 1+eps.
struct ScaleFamily {
  Fraction eps;
  std::int64_t h = 1;
  std::int64_t K = 0;
  int num_scales = 1;
  Weight w_max = 1;

  // ceil(2h * w * eps.den / (eps.num * 2^i))
  Weight scaled(Weight w, int scale) const;
  // Value of one rounded-distance unit at scale i: eps * 2^i / (2h).
  Fraction factor(int scale) const;
  // Rounded distance d at scale i, as an exact value.
  Fraction value(std::int64_t d, int scale) const;
};

ScaleFamily make_scale_family(std::int64_t h, Fraction eps, Weight w_max);
ScaleFamily make_scale_family(const WeightedGraph& g, std::int64_t h, Fraction eps);

struct MultiSourceResult {
  FractionTable table;
  // Largest number of broadcasts any node made on behalf of one source.
  std::int64_t max_broadcasts_per_source = 0;
  RunStats stats;
};

// Source announces (s,0) to itself at its start time; a node whose current
// rounded distance is x broadcasts (s,x) exactly x rounds into the scale
// window; receivers relax with the rounded edge weight, keeping values <= K.
// Each source runs its scales back to back in one window of (K+1) rounds per
// scale; outputs are the scale-wise minima as exact rationals.
MultiSourceResult bounded_hop_sssp(Simulator& sim, const WeightedGraph& g, NodeId source,
                                   std::int64_t h, Fraction eps);

// The same machinery for k sources at once, each execution offset by a
// uniformly random delay from {0,...,ceil(k*log2 n)}. The delays are made
// global first (BFS tree + pipelined broadcast, charged to the trace).
MultiSourceResult multi_source_bounded_hop(Simulator& sim, const WeightedGraph& g,
                                           std::vector<NodeId> sources, std::int64_t h, Fraction eps,
                                           std::uint64_t seed);

// Same, but on substituted symmetric edge weights (used by the clique
// algorithms, whose second phase runs on shortcut weights).
MultiSourceResult multi_source_bounded_hop_on(Simulator& sim, const WeightedGraph& g,
                                              const std::vector<Weight>& edge_weights,
                                              std::vector<NodeId> sources, std::int64_t h,
                                              Fraction eps, std::uint64_t seed);

// Single source, single weight function, distances clipped at K.
// Runs in at most K+1 rounds; every node broadcasts at most once.
DistanceTable bounded_distance_sssp(Simulator& sim, const WeightedGraph& g, NodeId source,
                                    std::int64_t K);

// All sources at once under an explicit weight function, random delays from
// {0,...,ceil(n*log2 n)}; returns integer distances clipped at K.
DistanceTable bounded_distance_apsp(Simulator& sim, const WeightedGraph& g,
                                    const std::vector<Weight>& edge_weights, std::int64_t K,
                                    std::uint64_t seed);

}  // namespace congest
