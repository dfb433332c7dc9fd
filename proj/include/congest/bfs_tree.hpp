#pragma once

#include <array>
#include <vector>

#include "congest/sim.hpp"

namespace congest {

struct BfsTree {
  NodeId root = 0;
  std::vector<NodeId> parent;  // parent[root] == root
  std::vector<std::int64_t> depth;
  std::int64_t height = 0;  // max depth
};

// Distributed BFS from `root`; rounds are charged to the simulator's trace.
// Parent choice is the smallest-id neighbor among first-round announcers.
BfsTree build_bfs_tree(Simulator& sim, const WeightedGraph& g, NodeId root);

// One item made global: who contributed it plus a small fixed payload.
struct BroadcastItem {
  NodeId origin = 0;
  std::array<std::int64_t, 3> payload{};
};

// Pipelined convergecast to the root followed by a pipelined downcast, both
// running concurrently on the two directions of each tree edge. Completes in
// at most 2*height + |items| rounds with per-edge load 1.
// Returns the items in the order every node ends up holding them; when
// `per_node_received` is given it is filled with how many items each node saw.
std::vector<BroadcastItem> broadcast_all(Simulator& sim, const WeightedGraph& g, const BfsTree& tree,
                                         std::vector<BroadcastItem> items,
                                         std::vector<std::int64_t>* per_node_received = nullptr);

}  // namespace congest
