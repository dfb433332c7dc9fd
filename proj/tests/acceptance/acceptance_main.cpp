// End-to-end checks over randomized corpora. Each criterion prints a single
// PASS/FAIL line; run with --criterion N to select one, default is all.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congest/clique.hpp"
#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/metrics.hpp"
#include "congest/oracles.hpp"
#include "congest/overlay.hpp"
#include "congest/rng.hpp"
#include "congest/rounding.hpp"
#include "congest/scaling.hpp"
#include "congest/shortcuts.hpp"
#include "congest/sim.hpp"

namespace {

using namespace congest;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Fraction one_plus(Fraction eps) { return Fraction(eps.den + eps.num, eps.den); }

Weight graph_w_max(const WeightedGraph& g) {
  Weight w = 1;
  for (std::int32_t e = 0; e < g.m(); ++e) w = std::max(w, g.edge(e).w);
  return w;
}

// Mixed-family random connected graph.
WeightedGraph random_graph(Rng& rng, int n_lo, int n_hi, Weight w_cap) {
  int n = static_cast<int>(rng.uniform(n_lo, n_hi));
  Weight w_max = rng.below(3) == 0 ? (Weight{1} << rng.below(11)) : rng.uniform(1, w_cap);
  w_max = std::min(w_max, w_cap);
  std::uint64_t seed = rng.next();
  if (rng.below(5) == 0) return gen_geometric(n, 0.2 + 0.4 * rng.unit(), w_max, seed);
  return gen_erdos_renyi(n, 0.04 + 0.5 * rng.unit(), w_max, seed);
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2 share one corpus: 100 single-source runs of the rounded
// bounded-hop search, checked against the hop-limited DP and the per-source
// broadcast budget. Computed once per process.

struct HopRecord {
  bool sandwich_ok = false;
  std::int64_t broadcasts = 0;
  std::int64_t budget = 0;
  double elapsed = 0;
};

const std::vector<HopRecord>& hop_runs() {
  static const std::vector<HopRecord> runs = [] {
    std::vector<HopRecord> out;
    Rng rng(20260814);
    const Fraction eps_menu[4] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}};
    auto t0 = Clock::now();
    for (int i = 0; i < 100; ++i) {
      int bucket = static_cast<int>(rng.below(10));
      int n_lo = bucket < 6 ? 8 : bucket < 9 ? 41 : 89;
      int n_hi = bucket < 6 ? 40 : bucket < 9 ? 88 : 128;
      WeightedGraph g = random_graph(rng, n_lo, n_hi, 1024);
      Fraction eps = rng.below(5) == 4 ? default_eps(g.n()) : eps_menu[rng.below(4)];
      std::int64_t spd = shortest_path_diameter(g);
      // The lower bound of the window is the h-hop distance itself, so h has
      // to cover every shortest path; the two natural choices are spd and n.
      std::int64_t h = (g.n() <= 40 && rng.below(4) == 0) ? g.n() : spd;
      NodeId s = static_cast<NodeId>(rng.below(g.n()));

      Simulator sim;
      MultiSourceResult res = bounded_hop_sssp(sim, g, s, h, eps);
      std::vector<Weight> oracle = hop_bounded_distances(g, s, h);

      HopRecord rec;
      Fraction hi = one_plus(eps);
      rec.sandwich_ok = true;
      for (NodeId v = 0; v < g.n(); ++v) {
        const Fraction& val = res.table.values[0][v];
        if (oracle[v] == kInf) {
          if (!val.is_inf()) rec.sandwich_ok = false;
          continue;
        }
        Fraction lo = to_fraction(oracle[v]);
        if (!(lo <= val && val <= hi * lo)) rec.sandwich_ok = false;
      }
      rec.broadcasts = res.max_broadcasts_per_source;
      rec.budget = ceil_log2(static_cast<std::uint64_t>(h) * graph_w_max(g)) + 1;
      rec.elapsed = secs(t0);
      out.push_back(rec);
    }
    return out;
  }();
  return runs;
}

Outcome criterion1() {
  const auto& runs = hop_runs();
  int ok = 0;
  for (const auto& r : runs) ok += r.sandwich_ok;
  double total = runs.back().elapsed;
  bool pass = ok == static_cast<int>(runs.size()) && total < 60.0;
  return {pass, fmt("window held on %d/%zu graphs, %.1fs", ok, runs.size(), total)};
}

Outcome criterion2() {
  const auto& runs = hop_runs();
  int ok = 0;
  std::int64_t worst = 0, cap = 0;
  for (const auto& r : runs) {
    ok += r.broadcasts <= r.budget;
    if (r.broadcasts > worst) {
      worst = r.broadcasts;
      cap = r.budget;
    }
  }
  return {ok == static_cast<int>(runs.size()),
          fmt("broadcast budget held on %d/%zu runs (max seen %lld)", ok, runs.size(),
              static_cast<long long>(worst ? worst : cap))};
}

// ---------------------------------------------------------------------------

Outcome criterion3() {
  Rng rng(3003);
  int combos = 0, ok = 0;
  for (int i = 0; i < 50; ++i) {
    WeightedGraph g = random_graph(rng, 8, 48, 1024);
    DistanceTable exact = all_pairs_dijkstra(g);
    int n = g.n();
    const int ks[3] = {1, static_cast<int>(isqrt_ceil(n)), n - 1};
    for (int k : ks) {
      WeightedGraph g2 = shortcut_graph(g, k);
      std::int64_t spd = shortest_path_diameter(g2);
      bool good = spd * k < 4 * static_cast<std::int64_t>(n);
      good = good && all_pairs_dijkstra(g2).values == exact.values;
      ++combos;
      ok += good;
    }
  }
  return {ok == combos, fmt("diameter drop and exact distances on %d/%d (graph,k) pairs", ok, combos)};
}

Outcome criterion4() {
  Rng rng(4004);
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    WeightedGraph g = random_graph(rng, 8, 64, 512);
    int k = static_cast<int>(rng.uniform(1, g.n() - 1));
    ShortcutSet sc = shortcuts_from_union(union_k_smallest(g, k), k);
    bool good = true;
    for (NodeId u = 0; u < g.n(); ++u)
      if (sc.nearest[u] != k_nearest(g, u, k)) good = false;
    ok += good;
  }
  return {ok == 50, fmt("local nearest sets matched the global ones on %d/50 graphs", ok)};
}

Outcome criterion5() {
  int runs = 0, in_bound = 0, invariant = 0;
  for (int gi = 0; gi < 10; ++gi) {
    int n = gi < 8 ? 64 : 128;
    double p = gi < 8 ? 0.05 : 0.028;
    WeightedGraph g = gen_erdos_renyi(n, p, 1, 5005 + gi);
    std::vector<NodeId> sources(n);
    for (int v = 0; v < n; ++v) sources[v] = v;
    std::int64_t cap = ceil_log2(static_cast<std::uint64_t>(n));
    std::vector<std::vector<Fraction>> first;
    for (int si = 0; si < 50; ++si) {
      Simulator sim;
      MultiSourceResult res =
          multi_source_bounded_hop(sim, g, sources, 2, {1, 2}, derive_seed(5005, gi * 64 + si));
      ++runs;
      in_bound += res.stats.max_edge_load <= cap;
      if (si == 0)
        first = res.table.values;
      else
        invariant += res.table.values == first;
    }
  }
  bool pass = in_bound * 100 >= runs * 95 && invariant == runs - 10;
  return {pass, fmt("load within ceil(log2 n) in %d/%d runs, values delay-independent in %d/%d",
                    in_bound, runs, invariant + 10, runs)};
}

Outcome criterion6() {
  Rng rng(6006);
  int runs = 0, ok = 0;
  for (int i = 0; i < 30; ++i) {
    int n = i < 27 ? static_cast<int>(rng.uniform(64, 128)) : (i == 27 ? 200 : 256);
    WeightedGraph g = gen_complete(n, rng.uniform(1, 1024), rng.next());
    std::int64_t cap = isqrt_ceil(16 * static_cast<std::int64_t>(n));  // ceil(4*sqrt(n))
    for (int si = 0; si < 2; ++si) {
      NodeId s = static_cast<NodeId>(rng.below(n));
      Simulator sim;
      CliqueSsspResult res = clique_sssp_exact(sim, g, s);
      ++runs;
      ok += res.table.values[0] == dijkstra(g, s) && res.phase2_rounds <= cap;
    }
  }
  return {ok == runs, fmt("exact rows within ceil(4*sqrt(n)) settle rounds on %d/%d runs", ok, runs)};
}

Outcome criterion7() {
  Rng rng(7007);
  const Fraction eps(1, 3);
  // 2 + 2*eps + eps^2
  const Fraction cap = Fraction(2, 1) + Fraction(2, 1) * eps + eps * eps;
  int runs = 0, within = 0, never_below = 0;
  for (int i = 0; i < 50; ++i) {
    int n = i % 10 < 7 ? 32 : 64;
    WeightedGraph g = gen_complete(n, rng.uniform(1, 64), rng.next());
    DistanceTable exact = all_pairs_dijkstra(g);
    Simulator sim;
    CliqueApspResult res = clique_apsp_approx(sim, g, eps, rng.next());
    bool in = true, ge = true;
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v) {
        Fraction d = to_fraction(exact.values[u][v]);
        const Fraction& got = res.table.values[u][v];
        if (got < d) ge = false;
        if (got > cap * d) in = false;
      }
    ++runs;
    within += in;
    never_below += ge;
  }
  bool pass = within * 100 >= runs * 95 && never_below == runs;
  return {pass, fmt("ratio within 2+2e+e^2 in %d/%d runs, never undershot in %d/%d", within, runs,
                    never_below, runs)};
}

Outcome criterion8() {
  Rng rng(8008);
  int runs = 0, within = 0, never_below = 0;
  for (int i = 0; i < 50; ++i) {
    WeightedGraph g = gen_path(2, 1, 1);
    std::int64_t hd = 0;
    for (int tries = 0; tries < 20; ++tries) {
      int n = static_cast<int>(rng.uniform(16, 128));
      g = gen_erdos_renyi(n, 0.15 + 0.35 * rng.unit(), rng.uniform(1, 16), rng.next());
      hd = eccentricity_stats(g).hop_diameter;
      if (hd * hd * hd <= static_cast<std::int64_t>(g.n()) * g.n()) break;  // hd <= n^(2/3)
    }
    Fraction eps = default_eps(g.n());
    Fraction cap = one_plus(eps) * one_plus(eps) * one_plus(eps);
    NodeId s = static_cast<NodeId>(rng.below(g.n()));
    Simulator sim;
    SublinearSsspResult res = sublinear_sssp(sim, g, s, rng.next());
    std::vector<Weight> exact = dijkstra(g, s);
    bool in = !res.hitting_failure, ge = true;
    for (NodeId v = 0; v < g.n(); ++v) {
      Fraction d = to_fraction(exact[v]);
      const Fraction& got = res.table.values[0][v];
      if (got < d) ge = false;
      if (got > cap * d) in = false;
    }
    ++runs;
    within += in;
    never_below += ge;
  }
  bool pass = within * 100 >= runs * 95 && never_below == runs;
  return {pass, fmt("ratio within (1+e)^3 in %d/%d runs, never undershot in %d/%d", within, runs,
                    never_below, runs)};
}

Outcome criterion9() {
  Rng rng(9009);
  const Fraction eps(1, 3);
  const Fraction hi = one_plus(eps);
  int ok = 0;
  for (int i = 0; i < 30; ++i) {
    WeightedGraph g = random_graph(rng, 16, 48, 32);
    EccentricityStats ex = eccentricity_stats(g);
    DistanceTable exact = all_pairs_dijkstra(g);
    Simulator sim;
    Fraction dia = approx_diameter(sim, g, eps);
    Fraction rad = approx_radius(sim, g, eps);
    FractionTable apsp = approx_apsp_scales(sim, g, eps);
    bool good = to_fraction(ex.diameter) <= dia && dia <= hi * to_fraction(ex.diameter);
    good = good && to_fraction(ex.radius) <= rad && rad <= hi * to_fraction(ex.radius);
    for (NodeId u = 0; u < g.n() && good; ++u)
      for (NodeId v = 0; v < g.n(); ++v) {
        Fraction d = to_fraction(exact.values[u][v]);
        const Fraction& got = apsp.values[u][v];
        if (!(d <= got && got <= hi * d)) {
          good = false;
          break;
        }
      }
    ok += good;
  }
  return {ok == 30, fmt("diameter, radius and all-pairs windows held on %d/30 graphs", ok)};
}

Outcome criterion10() {
  Rng rng(1010);
  int runs = 0, ok = 0;
  bool saw_fallback = false;
  for (int i = 0; i < 30; ++i) {
    int n_hi = i < 26 ? 64 : 128;
    WeightedGraph g = random_graph(rng, 16, n_hi, 1024);
    DistanceTable exact = all_pairs_dijkstra(g);
    for (int si = 0; si < 5; ++si) {
      ExactApspOptions opts;
      if (si == 3) opts.slack = 1;  // tightest legal schedule spacing
      if (si == 4) opts.force_fallback = true;
      Simulator sim;
      ExactApspResult res = exact_apsp(sim, g, derive_seed(1010, i * 8 + si), opts);
      saw_fallback = saw_fallback || res.any_fallback;
      ++runs;
      ok += res.table.values == exact.values;
    }
  }
  bool pass = ok == runs && saw_fallback;
  return {pass, fmt("matched the reference on %d/%d runs (central fallback exercised: %s)", ok,
                    runs, saw_fallback ? "yes" : "no")};
}

Outcome criterion11() {
  Rng rng(1111);
  int iters = 0, ok = 0;
  for (int i = 0; i < 15; ++i) {
    WeightedGraph g = random_graph(rng, 8, 48, 512);
    std::int64_t sqrt_cap = isqrt_ceil(g.n());
    for (int si = 0; si < 2; ++si) {
      ExactApspOptions opts;
      opts.collect_invariants = true;
      Simulator sim;
      ExactApspResult res = exact_apsp(sim, g, derive_seed(1111, i * 4 + si), opts);
      for (const IterationReport& it : res.iterations) {
        ++iters;
        ok += it.recurrence_ok && it.vec_nonneg && it.zero_equiv &&
              it.max_vec_ecc <= 2 * static_cast<std::int64_t>(g.n()) && it.zero_h <= sqrt_cap;
      }
    }
  }
  return {iters > 0 && ok == iters, fmt("all per-scale invariants held on %d/%d iterations", ok, iters)};
}

Outcome criterion12() {
  const int ns[4] = {32, 64, 128, 256};
  const std::uint64_t seeds[3] = {1, 2, 3};
  double linear_mean[4] = {}, clique_mean[4] = {};
  for (int i = 0; i < 4; ++i) {
    int n = ns[i];
    WeightedGraph sparse = gen_erdos_renyi(n, 6.0 / n, 1, 1212);
    WeightedGraph full = gen_complete(n, 1, 1212);
    for (std::uint64_t s : seeds) {
      Simulator sim;
      apsp_linear(sim, sparse, {1, 8}, s);
      linear_mean[i] += static_cast<double>(sim.trace.rounds) / 3.0;
      Simulator sim2;
      clique_sssp_exact(sim2, full, static_cast<NodeId>(s % n));
      clique_mean[i] += static_cast<double>(sim2.trace.rounds) / 3.0;
    }
  }
  double worst_lin = 0, worst_clq = 0;
  for (int i = 1; i < 4; ++i) {
    worst_lin = std::max(worst_lin, linear_mean[i] / linear_mean[i - 1]);
    worst_clq = std::max(worst_clq, clique_mean[i] / clique_mean[i - 1]);
  }
  bool pass = worst_lin <= 2.5 && worst_clq <= 1.9;
  return {pass, fmt("per-doubling growth: all-pairs %.2f (cap 2.5), clique %.2f (cap 1.9)",
                    worst_lin, worst_clq)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized end-to-end checks"};
  int which = 0;
  app.add_option("--criterion", which, "run a single criterion (1-12), default all")
      ->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::function<Outcome()> checks[12] = {
      criterion1, criterion2, criterion3,  criterion4,  criterion5,  criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11, criterion12};

  int failures = 0;
  for (int i = 1; i <= 12; ++i) {
    if (which != 0 && i != which) continue;
    Outcome out;
    try {
      out = checks[i - 1]();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d: %s (%s)\n", i, out.pass ? "PASS" : "FAIL", out.detail.c_str());
    std::fflush(stdout);
    failures += !out.pass;
  }
  return failures == 0 ? 0 : 1;
}
