#pragma once

#include <vector>

#include "congest/fraction.hpp"
#include "congest/graph.hpp"
#include "congest/shortcuts.hpp"
#include "congest/sim.hpp"

namespace congest {

// Algorithms for complete (fully connected) networks. Phase 1 of both ops
// broadcasts each node's k = ceil(sqrt(n)) lightest incident edges, after
// which everyone can reweight w'(uv) to dist(u,v) for shortcut pairs; the
// reweighted graph has shortest-path diameter below 4n/k.

// What one node ends up knowing before it solves its own instance locally.
struct CliqueLocalView {
  int n = 0;
  ShortcutSet nearest;                          // S_k for every node, exact distances
  std::vector<Weight> wprime_row;               // tightened w'(u, v) for this node's row
  std::vector<NodeId> sampled;                  // the random source set R
  std::vector<std::vector<Fraction>> dprime;    // d'(r, v) rows, one per sampled source
};

// A graph whose integer weights all sit over one common denominator, so the
// local searches stay in exact 64-bit arithmetic.
struct ScaledGraph {
  WeightedGraph g;
  std::int64_t denom = 1;
};

struct CliqueSsspResult {
  DistanceTable table;          // one exact row
  std::int64_t phase2_rounds = 0;
};

// Exact SSSP: k-round shortcut broadcast, then synchronous relaxation on the
// reweighted graph; settles within ceil(4*sqrt(n)) relaxation rounds.
CliqueSsspResult clique_sssp_exact(Simulator& sim, const WeightedGraph& g, NodeId source);

struct CliqueApspResult {
  FractionTable table;          // d''(u, v) for every ordered pair
  bool hitting_failure = false; // some shortcut set was missed by every sampled source
};

// (2 + 2*eps + eps^2)-approximate APSP: Phase 1 as above plus the row
// tightening through shortcut midpoints, Phase 2 runs the bounded-hop
// multi-source search from ceil(sqrt(n)*log2 n) random sources on the
// reweighted graph and broadcasts the resulting rows; each node then solves
// its locally assembled graph. Every output is >= the true distance.
CliqueApspResult clique_apsp_approx(Simulator& sim, const WeightedGraph& g, Fraction eps,
                                    std::uint64_t seed);

// The graph node u assembles: its own tightened row, everyone's shortcut
// edges at exact weight, and the broadcast source rows; duplicate edges
// collapse to the minimum. Weights are value * denom.
ScaledGraph build_gu(const CliqueLocalView& view, NodeId u);

}  // namespace congest
