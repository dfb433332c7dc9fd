#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// What happens when more messages are pushed onto a directed edge in one
// round than its declared capacity:
//   RecordOnly - deliver everything, keep statistics (default);
//   FailFast   - abort the run, reporting the first offending (round, edge);
//   Queue      - hold the excess back and release capacity-many per round.
enum class CapacityPolicy { RecordOnly, FailFast, Queue };

struct SimConfig {
  std::uint64_t seed = 0;
  std::int64_t edge_capacity = 1;
  CapacityPolicy policy = CapacityPolicy::RecordOnly;
  std::int64_t max_rounds = 500'000'000;
  bool record_per_round_loads = false;  // full (round, edge, count) detail
};

struct LoadEvent {
  std::int64_t round = 0;
  NodeId from = 0;
  NodeId to = 0;
  std::int64_t count = 0;
};

struct SimFailure {
  std::int64_t round = 0;
  NodeId from = 0;
  NodeId to = 0;
  std::int64_t load = 0;
};

// Cumulative record of everything a Simulator executed. `rounds` is a global
// clock: engine runs and explicitly charged phases both advance it.
struct SimTrace {
  std::int64_t rounds = 0;
  std::int64_t max_edge_load = 0;
  std::int64_t total_messages = 0;
  std::map<std::int64_t, std::int64_t> load_histogram;  // load -> #(round, edge)
  std::optional<SimFailure> failure;
  std::uint64_t rng_seed = 0;
  std::vector<LoadEvent> per_round_loads;  // populated only when configured

  std::string to_json() const;
};

// Per-run slice of the same statistics.
struct RunStats {
  std::int64_t rounds = 0;
  std::int64_t max_edge_load = 0;
  std::int64_t messages = 0;
};

// `dir` is the directed index the message travelled on (sender -> receiver),
// so a receiver can recover the undirected edge as dir >> 1.
template <typename Msg>
struct Envelope {
  NodeId from;
  std::int32_t dir;
  Msg msg;
};

struct Wake {
  NodeId node;
  std::int64_t round;
};

namespace detail {
template <typename Msg, typename Step>
class Engine;
}

// A node's view of the network for one step. Messages sent in round r are
// delivered in round r+1; a node is stepped in the rounds where it has mail
// or a scheduled wake-up.
template <typename Msg>
class NodeCtx {
 public:
  NodeId node() const { return node_; }
  std::int64_t round() const { return round_; }
  std::span<const Envelope<Msg>> inbox() const { return inbox_; }
  const WeightedGraph& graph() const { return *g_; }

  void broadcast(const Msg& m) {
    for (const auto* a = g_->adj_begin(node_); a != g_->adj_end(node_); ++a) send_adj(*a, m);
  }
  void send_adj(const WeightedGraph::Adj& a, const Msg& m) { send_(sink_, node_, a, m); }
  void send_to(NodeId v, const Msg& m) {
    const auto* lo = g_->adj_begin(node_);
    const auto* hi = g_->adj_end(node_);
    const auto* it = std::lower_bound(lo, hi, v, [](const WeightedGraph::Adj& a, NodeId x) { return a.to < x; });
    require(it != hi && it->to == v, Err::InvalidInput, "send_to: not a neighbor");
    send_adj(*it, m);
  }
  void wake_at(std::int64_t r) { wake_(sink_, node_, r); }
  void halt() { halt_(sink_, node_); }

 private:
  template <typename M, typename S>
  friend class detail::Engine;

  NodeId node_ = 0;
  std::int64_t round_ = 0;
  std::span<const Envelope<Msg>> inbox_;
  const WeightedGraph* g_ = nullptr;
  void* sink_ = nullptr;
  void (*send_)(void*, NodeId, const WeightedGraph::Adj&, const Msg&) = nullptr;
  void (*wake_)(void*, NodeId, std::int64_t) = nullptr;
  void (*halt_)(void*, NodeId) = nullptr;
};

namespace detail {

template <typename Msg, typename Step>
class Engine {
 public:
  Engine(const WeightedGraph& g, const SimConfig& cfg, SimTrace& trace, Step& step)
      : g_(g), cfg_(cfg), trace_(trace), step_(step) {
    inbox_.resize(g.n());
    stepped_.assign(g.n(), -1);
    halted_.assign(g.n(), 0);
    load_.assign(2 * static_cast<std::size_t>(g.m()), 0);
  }

  RunStats run(std::span<const Wake> initial) {
    for (const Wake& w : initial) {
      require(w.round >= 0, Err::InvalidInput, "initial wake in the past");
      wakes_.push({w.round, w.node});
    }
    std::int64_t base = trace_.rounds;
    RunStats stats;
    std::int64_t last_activity = 0;
    std::vector<NodeId> step_set;
    std::vector<Envelope<Msg>> deliver;

    while (true) {
      std::int64_t next = -1;
      if (!wakes_.empty()) next = wakes_.top().first;
      if (!pending_.empty() && (next < 0 || pending_round_ < next)) next = pending_round_;
      if (queued_total_ > 0 && (next < 0 || round_ + 1 < next)) next = round_ + 1;
      if (next < 0) break;
      require(next <= cfg_.max_rounds, Err::MaxRoundsExceeded, "simulation exceeded max_rounds");
      round_ = next;

      // Deliver this round's arrivals.
      step_set.clear();
      bool delivered = false;
      if (!pending_.empty() && pending_round_ == round_) {
        delivered = true;
        for (auto& p : pending_) {
          if (inbox_[p.dest].empty()) inbox_touched_.push_back(p.dest);
          inbox_[p.dest].push_back({p.from, p.dir, p.msg});
        }
        pending_.clear();
      }
      for (NodeId u : inbox_touched_)
        if (stepped_[u] != round_) {
          stepped_[u] = round_;
          step_set.push_back(u);
        }
      while (!wakes_.empty() && wakes_.top().first == round_) {
        NodeId u = wakes_.top().second;
        wakes_.pop();
        if (stepped_[u] != round_) {
          stepped_[u] = round_;
          step_set.push_back(u);
        }
      }
      std::sort(step_set.begin(), step_set.end());

      bool any_step = false;
      for (NodeId u : step_set) {
        if (halted_[u]) continue;
        any_step = true;
        NodeCtx<Msg> ctx;
        ctx.node_ = u;
        ctx.round_ = round_;
        ctx.inbox_ = std::span<const Envelope<Msg>>(inbox_[u]);
        ctx.g_ = &g_;
        ctx.sink_ = this;
        ctx.send_ = &Engine::send_cb;
        ctx.wake_ = &Engine::wake_cb;
        ctx.halt_ = &Engine::halt_cb;
        step_(ctx);
      }
      for (NodeId u : inbox_touched_) inbox_[u].clear();
      inbox_touched_.clear();

      if (cfg_.policy == CapacityPolicy::Queue) release_queued();

      // Fold this round's per-edge loads into the statistics.
      for (std::int32_t dir : load_touched_) {
        std::int64_t c = load_[dir];
        load_[dir] = 0;
        stats.messages += c;
        trace_.total_messages += c;
        stats.max_edge_load = std::max(stats.max_edge_load, c);
        trace_.max_edge_load = std::max(trace_.max_edge_load, c);
        ++trace_.load_histogram[c];
        if (cfg_.record_per_round_loads)
          trace_.per_round_loads.push_back({base + round_, g_.dir_tail(dir), g_.dir_head(dir), c});
        if (cfg_.policy == CapacityPolicy::FailFast && c > cfg_.edge_capacity && !trace_.failure) {
          trace_.failure = SimFailure{base + round_, g_.dir_tail(dir), g_.dir_head(dir), c};
        }
      }
      load_touched_.clear();
      if (trace_.failure && cfg_.policy == CapacityPolicy::FailFast) {
        trace_.rounds = base + round_;
        fail(Err::CapacityExceeded, "edge capacity exceeded at round " + std::to_string(trace_.failure->round));
      }

      if (delivered || any_step) last_activity = round_;
    }

    stats.rounds = last_activity;
    trace_.rounds = base + stats.rounds;
    return stats;
  }

 private:
  struct Pending {
    NodeId dest;
    NodeId from;
    std::int32_t dir;
    Msg msg;
  };

  static void send_cb(void* self, NodeId from, const WeightedGraph::Adj& a, const Msg& m) {
    static_cast<Engine*>(self)->do_send(from, a, m);
  }
  static void wake_cb(void* self, NodeId node, std::int64_t r) {
    static_cast<Engine*>(self)->do_wake(node, r);
  }
  static void halt_cb(void* self, NodeId node) { static_cast<Engine*>(self)->halted_[node] = 1; }

  void do_send(NodeId from, const WeightedGraph::Adj& a, const Msg& m) {
    if (cfg_.policy == CapacityPolicy::Queue) {
      auto& q = queues_[a.dir];
      if (q.empty()) queued_dirs_.push_back(a.dir);
      q.push_back({a.to, from, a.dir, m});
      ++queued_total_;
      return;
    }
    bump_load(a.dir);
    queue_arrival(a.to, from, a.dir, m);
  }

  void do_wake(NodeId node, std::int64_t r) {
    require(r > round_, Err::InvalidInput, "wake_at must be strictly in the future");
    wakes_.push({r, node});
  }

  void bump_load(std::int32_t dir) {
    if (load_[dir] == 0) load_touched_.push_back(dir);
    ++load_[dir];
  }

  void queue_arrival(NodeId dest, NodeId from, std::int32_t dir, const Msg& m) {
    pending_round_ = round_ + 1;
    pending_.push_back({dest, from, dir, m});
  }

  void release_queued() {
    std::vector<std::int32_t> still;
    for (std::int32_t dir : queued_dirs_) {
      auto& q = queues_[dir];
      std::int64_t release = std::min<std::int64_t>(cfg_.edge_capacity, static_cast<std::int64_t>(q.size()));
      for (std::int64_t i = 0; i < release; ++i) {
        Pending p = q.front();
        q.pop_front();
        --queued_total_;
        bump_load(dir);
        queue_arrival(p.dest, p.from, p.dir, p.msg);
      }
      if (!q.empty()) still.push_back(dir);
    }
    queued_dirs_.swap(still);
  }

  const WeightedGraph& g_;
  const SimConfig& cfg_;
  SimTrace& trace_;
  Step& step_;

  std::int64_t round_ = -1;
  std::priority_queue<std::pair<std::int64_t, NodeId>, std::vector<std::pair<std::int64_t, NodeId>>,
                      std::greater<>>
      wakes_;
  std::vector<Pending> pending_;
  std::int64_t pending_round_ = -1;
  std::vector<std::vector<Envelope<Msg>>> inbox_;
  std::vector<NodeId> inbox_touched_;
  std::vector<std::int64_t> stepped_;
  std::vector<char> halted_;
  std::vector<std::int64_t> load_;
  std::vector<std::int32_t> load_touched_;
  std::unordered_map<std::int32_t, std::deque<Pending>> queues_;
  std::vector<std::int32_t> queued_dirs_;
  std::int64_t queued_total_ = 0;
};

}  // namespace detail

// Owns the configuration and the cumulative trace. Each `run` executes one
// homogeneous node program (a callable stepped per woken node per round);
// `charge_rounds` accounts for phases whose schedule is deterministic and
// collision-free (pipelined tree traffic), without stepping the engine.
class Simulator {
 public:
  Simulator() { trace.rng_seed = config.seed; }
  explicit Simulator(SimConfig cfg) : config(cfg) { trace.rng_seed = cfg.seed; }

  template <typename Msg, typename Step>
  RunStats run(const WeightedGraph& g, std::span<const Wake> initial, Step&& step) {
    detail::Engine<Msg, Step> engine(g, config, trace, step);
    return engine.run(initial);
  }

  template <typename Msg, typename Step>
  RunStats run_all_at_zero(const WeightedGraph& g, Step&& step) {
    std::vector<Wake> init(g.n());
    for (NodeId u = 0; u < g.n(); ++u) init[u] = {u, 0};
    return run<Msg>(g, init, std::forward<Step>(step));
  }

  void charge_rounds(std::int64_t r) { trace.rounds += r; }

  SimConfig config;
  SimTrace trace;
};

}  // namespace congest
