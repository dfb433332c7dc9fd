#include "congest/bfs_tree.hpp"

#include <algorithm>

namespace congest {

BfsTree build_bfs_tree(Simulator& sim, const WeightedGraph& g, NodeId root) {
  require(g.is_connected(), Err::Disconnected, "build_bfs_tree needs a connected graph");
  BfsTree tree;
  tree.root = root;
  tree.parent.assign(g.n(), -1);
  tree.depth.assign(g.n(), -1);
  tree.parent[root] = root;
  tree.depth[root] = 0;

  struct Msg {
    std::int64_t depth;
  };
  auto step = [&](NodeCtx<Msg>& ctx) {
    NodeId u = ctx.node();
    if (u == root && ctx.round() == 0) {
      ctx.broadcast({0});
      return;
    }
    if (tree.depth[u] >= 0) return;  // already joined
    NodeId best = -1;
    for (const auto& env : ctx.inbox()) {
      if (best < 0 || env.from < best) best = env.from;
    }
    if (best < 0) return;
    tree.parent[u] = best;
    tree.depth[u] = tree.depth[best] + 1;
    ctx.broadcast({tree.depth[u]});
  };

  std::vector<Wake> init{{root, 0}};
  sim.run<Msg>(g, init, step);
  for (NodeId u = 0; u < g.n(); ++u) tree.height = std::max(tree.height, tree.depth[u]);
  return tree;
}

std::vector<BroadcastItem> broadcast_all(Simulator& sim, const WeightedGraph& g, const BfsTree& tree,
                                         std::vector<BroadcastItem> items,
                                         std::vector<std::int64_t>* per_node_received) {
  NodeId root = tree.root;
  // Per-node send queues and the root's collected order.
  std::vector<std::deque<BroadcastItem>> up(g.n());
  std::deque<BroadcastItem> down;
  std::vector<BroadcastItem> collected;
  std::int64_t downcast_sent = 0;
  std::vector<std::int64_t> seen(g.n(), 0);

  for (const auto& it : items) {
    if (it.origin == root) {
      collected.push_back(it);
      down.push_back(it);
    } else {
      up[it.origin].push_back(it);
    }
  }

  struct Msg {
    std::int8_t downward;
    BroadcastItem item;
  };
  auto step = [&](NodeCtx<Msg>& ctx) {
    NodeId u = ctx.node();
    for (const auto& env : ctx.inbox()) {
      if (env.msg.downward) {
        // Record and keep flowing toward the leaves.
        ++seen[u];
        for (const auto* a = g.adj_begin(u); a != g.adj_end(u); ++a) {
          if (tree.parent[a->to] == u) ctx.send_adj(*a, env.msg);
        }
      } else if (u == root) {
        collected.push_back(env.msg.item);
        down.push_back(env.msg.item);
      } else {
        up[u].push_back(env.msg.item);
      }
    }
    if (u == root) {
      if (!down.empty()) {
        Msg out{1, down.front()};
        down.pop_front();
        ++downcast_sent;
        for (const auto* a = g.adj_begin(u); a != g.adj_end(u); ++a) {
          if (tree.parent[a->to] == u) ctx.send_adj(*a, out);
        }
        if (!down.empty()) ctx.wake_at(ctx.round() + 1);
      }
    } else if (!up[u].empty()) {
      Msg out{0, up[u].front()};
      up[u].pop_front();
      ctx.send_to(tree.parent[u], out);
      if (!up[u].empty()) ctx.wake_at(ctx.round() + 1);
    }
  };

  std::vector<Wake> init;
  init.push_back({root, 0});
  for (NodeId u = 0; u < g.n(); ++u) {
    if (u != root && !up[u].empty()) init.push_back({u, 0});
  }
  sim.run<Msg>(g, init, step);
  require(collected.size() == items.size() && downcast_sent == static_cast<std::int64_t>(items.size()),
          Err::InvalidInput, "broadcast_all lost items");
  if (per_node_received) {
    seen[root] = static_cast<std::int64_t>(collected.size());
    *per_node_received = std::move(seen);
  }
  return collected;
}

}  // namespace congest
