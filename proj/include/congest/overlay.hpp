#pragma once

#include <vector>

#include "congest/fraction.hpp"
#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

// A virtual graph on a sampled subset of nodes. Virtual edge weights come
// from a bounded-hop multi-source run, so each is at least the true distance
// between its endpoints and at most (1+eps) times the h-hop distance.
struct OverlayNetwork {
  std::vector<NodeId> members;   // sorted; always contains the source it was built for
  std::int64_t h = 1;            // hop window the virtual edges summarize
  Fraction eps;
  // Dense member-by-member weights; infinity marks "no virtual edge".
  std::vector<std::vector<Fraction>> weights;
  // What every node keeps from the build: its estimate to each member
  // (indexed [member position][node]).
  std::vector<std::vector<Fraction>> to_members;
  // Declared shortest-path-diameter bound, used as the hop budget later.
  std::int64_t spd_bound = 1;
};

// Independent inclusion with probability alpha/n; the source always joins.
std::vector<NodeId> sample_landmarks(int n, int alpha, NodeId source, std::uint64_t seed);

// Multi-source bounded-hop run from the landmarks; finite pairwise estimates
// become virtual edges and the full estimate table is retained.
OverlayNetwork build_overlay(Simulator& sim, const WeightedGraph& g,
                             const std::vector<NodeId>& landmarks, std::int64_t h, Fraction eps,
                             std::uint64_t seed);

// Every member's beta lightest virtual edges are broadcast; members then add
// their beta nearest overlay nodes as shortcuts (also broadcast). Overlay
// distances are preserved exactly and the SPD drops below 4*|members|/beta.
OverlayNetwork reduce_overlay_spd(Simulator& sim, const WeightedGraph& g,
                                  const OverlayNetwork& overlay, std::int64_t beta);

// Bounded-hop SSSP over the overlay with h = the declared SPD bound, every
// virtual round realized by counting plus a pipelined broadcast on the base
// tree. Returns per-member estimates within (1+eps) of overlay distances.
std::vector<Fraction> sssp_on_overlay(Simulator& sim, const WeightedGraph& g,
                                      const OverlayNetwork& overlay, NodeId source, Fraction eps);

struct SublinearSsspResult {
  FractionTable table;            // one row, indexed by node
  bool hitting_failure = false;   // some node ended up with no landmark route
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
};

// Full pipeline: sample landmarks, build + shortcut the overlay, solve on it,
// and combine per node as min over members of (estimate to member + member's
// overlay distance). Never below the true distance.
SublinearSsspResult sublinear_sssp(Simulator& sim, const WeightedGraph& g, NodeId source,
                                   std::uint64_t seed);

}  // namespace congest
