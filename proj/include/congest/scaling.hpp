#pragma once

#include <vector>

#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

// Exact all-pairs pipeline. Weights are peeled digit by digit in a base-2
// representation whose digits are all 1 or 2; at scale i the per-source
// reweighting vec w_i^s(uv) = 2*d_{i+1}(s,u) - 2*d_{i+1}(s,v) + w_i(uv) is
// nonnegative, zero exactly where w_i is zero, and has eccentricity <= 2n,
// so a distance-capped search plus a cluster completion recovers exact
// distances for the next scale.

// x = sum digits[j] * 2^j, least significant first, every digit 1 or 2.
struct PositiveBinary {
  std::vector<int> digits;
};

PositiveBinary positive_binary(std::int64_t x);
std::int64_t positive_binary_value(const PositiveBinary& b);

// Tail sums w_i(uv) = sum_{j>=i} b_j(uv) * 2^(j-i). w_0 is the original
// weight, w_i = 2*w_{i+1} + b_i while digits remain, then 0.
std::vector<Weight> scale_weights(const WeightedGraph& g, int i);

// Number of scales = the longest digit string over all edges.
int scale_count(const WeightedGraph& g);

struct MultiWeightFamily {
  std::vector<AsymWeights> per_source;  // one 2m-entry table per source node
  std::int64_t zero_bound = 1;          // max nodes on any zero-weight path
  std::int64_t ecc_bound = 0;           // 2n, the cap the searches rely on
};

// Builds the family from the previous scale's exact distances (one charged
// neighbor exchange of n values per node).
MultiWeightFamily reweight_per_source(Simulator& sim, const WeightedGraph& g,
                                      const std::vector<Weight>& w_i,
                                      const DistanceTable& dist_prev);

struct ClusterPartition {
  std::vector<int> cluster;  // node -> cluster index
  std::vector<NodeId> rep;   // per cluster, its smallest node id
  std::vector<int> size;
  int count = 0;
};

// Connected components of the zero-weight subgraph, found by flooding the
// minimum id over zero edges (at most n rounds, then one broadcast).
ClusterPartition cluster_zero_components(Simulator& sim, const WeightedGraph& g,
                                         const std::vector<Weight>& w_i);

struct PrunedGraph {
  WeightedGraph h;
  std::vector<std::int32_t> orig_edge;  // h edge id -> g edge id
};

// Drops every edge internal to a cluster larger than ceil(sqrt(n)); zero
// paths in the result can visit at most ceil(sqrt(n)) nodes.
PrunedGraph prune_big_clusters(const WeightedGraph& g, const ClusterPartition& part);

struct MultiWeightOptions {
  std::int64_t slack = 0;       // spacing multiplier; 0 selects ceil(log2 n)
  bool force_fallback = false;  // skip the scheduler, aggregate centrally
};

struct MultiWeightResult {
  DistanceTable table;  // row s: distances from s under vec w^s, capped at K
  bool congestion_fallback = false;
};

// All sources at once on the pruned graph: source s starts at a random
// offset in [0, n), zero edges forward a value the moment it first arrives,
// and an edge of weight w releases value l+w exactly (l+w) * zero_bound *
// slack rounds after the source's start. When the per-edge budget of
// ceil(log2 n) messages per round trips, the run restarts as a charged
// collect-everything-centrally pass; either way the values are exact.
MultiWeightResult multi_weight_k_apsp(Simulator& sim, const PrunedGraph& pruned,
                                      const MultiWeightFamily& family, std::int64_t K,
                                      std::uint64_t seed, const MultiWeightOptions& opts = {});

// d'(s, u) = 2*d_{i+1}(s, u) + capped family distance; infinity propagates.
DistanceTable candidate_distances(const DistanceTable& dist_prev, const DistanceTable& capped);

// Per-cluster-pair minimum of d' over member pairs, both orientations.
std::vector<std::vector<Weight>> aggregate_clusters(const ClusterPartition& part,
                                                    const DistanceTable& dprime);

// Node u's local completion: a graph on clusters with u's own cluster joined
// to everything and big clusters joined to everything, searched from u's
// cluster; output is exact dist under w_i, indexed by node.
std::vector<Weight> cluster_graph_complete(NodeId u, const ClusterPartition& part,
                                           const std::vector<std::vector<Weight>>& cluster_dprime,
                                           const std::vector<char>& big);

struct IterationReport {
  int scale = 0;
  bool recurrence_ok = true;   // w_i == 2*w_{i+1} + b_i on every edge
  bool vec_nonneg = true;
  bool zero_equiv = true;      // vec w_i^s(uv) == 0 exactly when w_i(uv) == 0
  std::int64_t max_vec_ecc = 0;
  std::int64_t zero_h = 0;     // largest zero component in the pruned graph
  bool fallback = false;
};

struct ExactApspOptions {
  std::int64_t slack = 0;
  bool force_fallback = false;
  bool collect_invariants = false;  // fill the costly IterationReport fields
};

struct ExactApspResult {
  DistanceTable table;
  std::vector<IterationReport> iterations;
  bool any_fallback = false;
};

// Runs the scales from the most significant digit down to 0, threading each
// scale's exact distances into the next; the final table equals the true
// all-pairs distances on every seed.
ExactApspResult exact_apsp(Simulator& sim, const WeightedGraph& g, std::uint64_t seed,
                           const ExactApspOptions& opts = {});

}  // namespace congest
