#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "congest/common.hpp"
#include "congest/fraction.hpp"

namespace congest {

// Undirected weighted graph. Each edge is stored once; the two directions
// of edge e get directed indices 2e (u->v) and 2e+1 (v->u), which is what
// per-direction weight tables and the simulator's load accounting key on.
class WeightedGraph {
 public:
  struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Weight w = 1;
  };

  // One adjacency entry of some node x: the neighbor, the edge weight,
  // the undirected edge id and the directed index for x -> neighbor.
  struct Adj {
    NodeId to = 0;
    Weight w = 1;
    std::int32_t edge = 0;
    std::int32_t dir = 0;
  };

  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Neighbors of u, sorted by id.
  const Adj* adj_begin(NodeId u) const { return adj_.data() + offset_[u]; }
  const Adj* adj_end(NodeId u) const { return adj_.data() + offset_[u + 1]; }
  int degree(NodeId u) const { return static_cast<int>(offset_[u + 1] - offset_[u]); }

  Weight max_weight() const { return max_w_; }
  bool is_connected() const;
  bool is_complete() const;

  // Endpoint pair of a directed index: (tail, head).
  NodeId dir_tail(std::int32_t dir) const {
    const Edge& e = edges_[dir >> 1];
    return (dir & 1) ? e.v : e.u;
  }
  NodeId dir_head(std::int32_t dir) const {
    const Edge& e = edges_[dir >> 1];
    return (dir & 1) ? e.u : e.v;
  }

  std::uint64_t content_hash() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offset_;
  std::vector<Adj> adj_;
  Weight max_w_ = 0;
};

// Text format: first line "n m", then one "u v w" line per edge.
// '#' starts a comment, blank lines are skipped, ids are 0-based.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);
void write_graph_file(const std::string& path, const WeightedGraph& g);

// Distances from a set of sources; kInf marks "unreachable"/"clipped".
struct DistanceTable {
  std::vector<NodeId> sources;
  std::vector<std::vector<Weight>> values;  // [source index][node]

  const std::vector<Weight>& row(int i) const { return values[i]; }
};

// Same shape for algorithms whose outputs are exact rationals.
struct FractionTable {
  std::vector<NodeId> sources;
  std::vector<std::vector<Fraction>> values;
};

// Per-direction weights over a graph's directed indices (2m entries).
// Used by the per-source reduced weights, where w(u->v) != w(v->u).
struct AsymWeights {
  std::vector<Weight> w;  // indexed by directed index

  Weight operator()(std::int32_t dir) const { return w[dir]; }
};

}  // namespace congest
