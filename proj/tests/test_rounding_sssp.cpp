#include <doctest.h>

#include "congest/generators.hpp"
#include "congest/oracles.hpp"
#include "congest/rounding.hpp"
#include "oracle_utils.hpp"

using namespace congest;

namespace {

WeightedGraph triangle_113() {
  return WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
}

// sandwich: dist <= est <= (1+eps) * dist^h, checked as exact rationals
void check_sandwich(const WeightedGraph& g, NodeId s, std::int64_t h, Fraction eps,
                    const std::vector<Fraction>& row) {
  auto lo = dijkstra(g, s);
  auto hi = hop_bounded_distances(g, s, h);
  Fraction one_eps = Fraction::whole(1) + eps;
  for (NodeId v = 0; v < g.n(); ++v) {
    CHECK(row[v] >= to_fraction(lo[v]));
    CHECK(row[v] <= one_eps * to_fraction(hi[v]));
  }
}

}  // namespace

TEST_SUITE("rounding_sssp") {

TEST_CASE("default eps is 1 over max(2, ceil log2 n)") {
  CHECK(default_eps(2) == Fraction(1, 2));
  CHECK(default_eps(4) == Fraction(1, 2));
  CHECK(default_eps(5) == Fraction(1, 3));
  CHECK(default_eps(1024) == Fraction(1, 10));
}

TEST_CASE("scaled weight formula, pinned values") {
  // ceil(2*4*3 / (0.5 * 8)) = 6 at the scale whose range is 8
  ScaleFamily f = make_scale_family(4, Fraction(1, 2), 3);
  REQUIRE(f.num_scales > 3);
  CHECK(f.scaled(3, 3) == 6);

  // range * eps == 2h makes the scaling the identity
  ScaleFamily id = make_scale_family(1, Fraction(1, 2), 16);
  for (Weight w = 1; w <= 16; ++w) CHECK(id.scaled(w, 2) == w);

  // ceil(2*2*1 / (0.5 * 1)) = 8
  ScaleFamily e = make_scale_family(2, Fraction(1, 2), 1);
  CHECK(e.scaled(1, 0) == 8);
}

TEST_CASE("family shape") {
  ScaleFamily f = make_scale_family(4, Fraction(1, 2), 3);
  CHECK(f.K == ceil_div((1 * 1 + 2 * 2) * 4, 1));  // (1 + 2/eps) * h = 20
  CHECK(f.num_scales == ceil_log2(4 * 3) + 1);
  CHECK(f.value(4, 1) == Fraction(4, 1) * f.factor(1));
  CHECK(f.factor(1) == Fraction(1, 2) * Fraction(2, 8));  // eps * 2^i / (2h)
}

TEST_CASE("distance capped search at K = 0") {
  WeightedGraph g = triangle_113();
  Simulator sim;
  DistanceTable t = bounded_distance_sssp(sim, g, 0, 0);
  CHECK(t.values[0] == std::vector<Weight>{0, kInf, kInf});
}

TEST_CASE("distance capped search clips at K") {
  WeightedGraph g = triangle_113();
  Simulator sim;
  CHECK(bounded_distance_sssp(sim, g, 0, 2).values[0] == std::vector<Weight>{0, 1, 2});
  CHECK(bounded_distance_sssp(sim, g, 0, 1).values[0] == std::vector<Weight>{0, 1, kInf});
}

TEST_CASE("distance capped search equals clipped dijkstra") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    WeightedGraph g = gen_erdos_renyi(14, 0.3, 7, seed);
    Simulator sim;
    for (std::int64_t K : {3, 9, 40}) {
      DistanceTable t = bounded_distance_sssp(sim, g, 1, K);
      auto d = dijkstra(g, 1);
      for (NodeId v = 0; v < g.n(); ++v) CHECK(t.values[0][v] == (d[v] <= K ? d[v] : kInf));
    }
  }
}

TEST_CASE("single edge estimate is pinned") {
  WeightedGraph g(2, {{0, 1, 5}});
  Simulator sim;
  MultiSourceResult r = bounded_hop_sssp(sim, g, 0, 1, Fraction(1, 2));
  CHECK(r.table.values[0][0] == Fraction::whole(0));
  CHECK(r.table.values[0][1] == Fraction::whole(5));
}

TEST_CASE("triangle estimates are pinned and sandwiched") {
  // with h=1 the capped searches still walk two rounded hops, so the
  // estimate for node 2 lands at 2: above dist, below (1+eps)*dist^1
  WeightedGraph g = triangle_113();
  Simulator sim;
  MultiSourceResult r = bounded_hop_sssp(sim, g, 0, 1, Fraction(1, 2));
  CHECK(r.table.values[0][1] == Fraction::whole(1));
  CHECK(r.table.values[0][2] == Fraction::whole(2));
  check_sandwich(g, 0, 1, Fraction(1, 2), r.table.values[0]);
}

TEST_CASE("estimates are a 1+eps approximation at full hop budget") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    WeightedGraph g = gen_erdos_renyi(6 + seed % 14, 0.3, 12, seed);
    Simulator sim;
    Fraction eps(1, 2 + seed % 3);
    MultiSourceResult r = bounded_hop_sssp(sim, g, 0, g.n(), eps);
    check_sandwich(g, 0, g.n(), eps, r.table.values[0]);
    CHECK(r.max_broadcasts_per_source <= ceil_log2(g.n() * g.max_weight()) + 1);
  }
}

TEST_CASE("hop budget below the shortest path diameter") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    WeightedGraph g = gen_erdos_renyi(8, 0.4, 9, seed);
    for (std::int64_t h : {1, 2, 4}) {
      Simulator sim;
      MultiSourceResult r = bounded_hop_sssp(sim, g, 0, h, Fraction(1, 3));
      check_sandwich(g, 0, h, Fraction(1, 3), r.table.values[0]);
    }
  }
}

TEST_CASE("one source through the multi source path, any seed") {
  WeightedGraph g = gen_erdos_renyi(12, 0.3, 6, 4);
  Simulator a;
  MultiSourceResult solo = bounded_hop_sssp(a, g, 3, g.n(), Fraction(1, 2));
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    Simulator b;
    MultiSourceResult multi = multi_source_bounded_hop(b, g, {3}, g.n(), Fraction(1, 2), seed);
    CHECK(multi.table.values[0] == solo.table.values[0]);
  }
}

TEST_CASE("two sources on a single edge match standalone runs") {
  WeightedGraph g(2, {{0, 1, 9}});
  Simulator a;
  MultiSourceResult multi = multi_source_bounded_hop(a, g, {0, 1}, 1, Fraction(1, 2), 5);
  for (NodeId s : {0, 1}) {
    Simulator b;
    MultiSourceResult solo = bounded_hop_sssp(b, g, s, 1, Fraction(1, 2));
    CHECK(multi.table.values[s] == solo.table.values[0]);
  }
}

TEST_CASE("all sources at once: values match standalone runs, rounds stay bounded") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    WeightedGraph g = gen_erdos_renyi(12, 0.35, 8, seed * 13);
    std::vector<NodeId> sources(g.n());
    for (NodeId u = 0; u < g.n(); ++u) sources[u] = u;
    Fraction eps(1, 2);
    std::int64_t h = g.n();
    Simulator sim;
    MultiSourceResult multi = multi_source_bounded_hop(sim, g, sources, h, eps, seed);
    for (NodeId s = 0; s < g.n(); ++s) {
      Simulator solo_sim;
      MultiSourceResult solo = bounded_hop_sssp(solo_sim, g, s, h, eps);
      CHECK(multi.table.values[s] == solo.table.values[0]);
    }
    ScaleFamily f = make_scale_family(g, h, eps);
    std::int64_t hopdiam = eccentricity_stats(g).hop_diameter;
    std::int64_t budget = g.n() * log2_ceil_min1(g.n()) +
                          ceil_div((eps.num + 2 * eps.den) * h, eps.num) * f.num_scales + hopdiam;
    CHECK(sim.trace.rounds <= 3 * budget);
  }
}

TEST_CASE("values do not depend on the schedule seed") {
  WeightedGraph g = gen_erdos_renyi(10, 0.4, 5, 21);
  std::vector<NodeId> sources(g.n());
  for (NodeId u = 0; u < g.n(); ++u) sources[u] = u;
  FractionTable first;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Simulator sim;
    MultiSourceResult r = multi_source_bounded_hop(sim, g, sources, 4, Fraction(1, 2), seed);
    if (seed == 1) {
      first = r.table;
      continue;
    }
    for (NodeId s = 0; s < g.n(); ++s) CHECK(r.table.values[s] == first.values[s]);
  }
}

TEST_CASE("all sources, explicit weights, clipped integer output") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    WeightedGraph g = gen_erdos_renyi(11, 0.35, 6, seed);
    std::vector<Weight> w;
    for (const auto& e : g.edges()) w.push_back(e.w + 1);
    std::vector<WeightedGraph::Edge> bumped;
    for (const auto& e : g.edges()) bumped.push_back({e.u, e.v, e.w + 1});
    WeightedGraph ref(g.n(), bumped);
    Simulator sim;
    std::int64_t K = 15;
    DistanceTable t = bounded_distance_apsp(sim, g, w, K, seed);
    for (NodeId s = 0; s < g.n(); ++s) {
      auto d = dijkstra(ref, s);
      for (NodeId v = 0; v < g.n(); ++v) CHECK(t.values[s][v] == (d[v] <= K ? d[v] : kInf));
    }
  }
}

}  // TEST_SUITE
