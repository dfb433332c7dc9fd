#include "congest/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace congest {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  require(n >= 1, Err::InvalidInput, "graph needs at least one node");
  for (auto& e : edges_) {
    require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, Err::InvalidInput, "edge endpoint out of range");
    require(e.u != e.v, Err::InvalidInput, "self loops are not allowed");
    require(e.w >= 1, Err::InvalidInput, "edge weights must be >= 1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    require(edges_[i].u != edges_[i - 1].u || edges_[i].v != edges_[i - 1].v, Err::InvalidInput,
            "parallel edges are not allowed");
  }

  offset_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offset_[e.u + 1];
    ++offset_[e.v + 1];
    max_w_ = std::max(max_w_, e.w);
  }
  for (int i = 0; i < n_; ++i) offset_[i + 1] += offset_[i];
  adj_.resize(edges_.size() * 2);
  std::vector<std::int64_t> cur(offset_.begin(), offset_.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    adj_[cur[ed.u]++] = Adj{ed.v, ed.w, e, 2 * e};
    adj_[cur[ed.v]++] = Adj{ed.u, ed.w, e, 2 * e + 1};
  }
  for (int u = 0; u < n_; ++u) {
    std::sort(adj_.begin() + offset_[u], adj_.begin() + offset_[u + 1],
              [](const Adj& a, const Adj& b) { return a.to < b.to; });
  }
}

bool WeightedGraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (const Adj* a = adj_begin(u); a != adj_end(u); ++a) {
      if (!seen[a->to]) {
        seen[a->to] = 1;
        ++count;
        stack.push_back(a->to);
      }
    }
  }
  return count == n_;
}

bool WeightedGraph::is_complete() const {
  return static_cast<std::int64_t>(m()) == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
}

std::uint64_t WeightedGraph::content_hash() const {
  // FNV-1a over (n, edges); used to key oracle caches.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
    mix(static_cast<std::uint64_t>(e.w));
  }
  return h;
}

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  require(next_line(header), Err::InvalidInput, "missing graph header line");
  std::istringstream hs(header);
  std::int64_t n = 0, m = 0;
  require(static_cast<bool>(hs >> n >> m), Err::InvalidInput, "bad graph header line");
  require(n >= 1 && m >= 0, Err::InvalidInput, "bad graph header values");

  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) {
    std::string row;
    require(next_line(row), Err::InvalidInput, "missing edge line");
    std::istringstream es(row);
    std::int64_t u, v, w;
    require(static_cast<bool>(es >> u >> v >> w), Err::InvalidInput, "bad edge line: " + row);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  return WeightedGraph(static_cast<int>(n), std::move(edges));
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::InvalidInput, "cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  require(out.good(), Err::InvalidInput, "cannot open output file: " + path);
  write_graph(out, g);
}

}  // namespace congest
