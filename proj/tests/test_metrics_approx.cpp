#include <doctest.h>

#include "congest/generators.hpp"
#include "congest/metrics.hpp"
#include "congest/oracles.hpp"
#include "congest/rounding.hpp"

using namespace congest;

namespace {

void check_op_sandwich(Fraction got, Weight exact, Fraction eps) {
  CHECK(got >= to_fraction(exact));
  CHECK(got <= (Fraction::whole(1) + eps) * to_fraction(exact));
}

}  // namespace

TEST_SUITE("metrics_approx") {

TEST_CASE("single edge diameter and radius") {
  for (Weight w : {1, 13, 900}) {
    WeightedGraph g(2, {{0, 1, w}});
    Simulator sim;
    Fraction eps(1, 3);
    check_op_sandwich(approx_diameter(sim, g, eps), w, eps);
    check_op_sandwich(approx_radius(sim, g, eps), w, eps);
  }
}

TEST_CASE("three node path, pinned value") {
  // range fixed from node 0's eccentricity (2) gives rescale ceil(4.5*w),
  // so the unit path's diameter comes back as exactly 10 * (2/9)
  WeightedGraph g = gen_path(3, 1, 1);
  Simulator sim;
  Fraction d = approx_diameter(sim, g, Fraction(1, 3));
  CHECK(d == Fraction(20, 9));
  check_op_sandwich(d, 2, Fraction(1, 3));
}

TEST_CASE("unit star radius") {
  WeightedGraph g = gen_star(6, 1, 1);
  Simulator sim;
  Fraction r = approx_radius(sim, g, Fraction(1, 3));
  check_op_sandwich(r, 1, Fraction(1, 3));
}

TEST_CASE("trivial graph") {
  WeightedGraph g(1, {});
  Simulator sim;
  CHECK(approx_diameter(sim, g, Fraction(1, 2)) == Fraction::whole(0));
  CHECK(approx_radius(sim, g, Fraction(1, 2)) == Fraction::whole(0));
}

TEST_CASE("disconnected input is rejected") {
  WeightedGraph g(3, {{0, 1, 1}});
  Simulator sim;
  CHECK_THROWS_AS(approx_diameter(sim, g, Fraction(1, 2)), Error);
  CHECK_THROWS_AS(approx_radius(sim, g, Fraction(1, 2)), Error);
}

TEST_CASE("diameter sandwich on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    WeightedGraph g = gen_erdos_renyi(8 + seed % 12, 0.35, 14, seed * 5);
    Simulator sim;
    Fraction eps(1, 2 + seed % 3);
    check_op_sandwich(approx_diameter(sim, g, eps), eccentricity_stats(g).diameter, eps);
  }
}

TEST_CASE("radius sandwich on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    WeightedGraph g = gen_erdos_renyi(8 + seed % 12, 0.35, 14, seed * 5 + 1);
    Simulator sim;
    Fraction eps(1, 2 + seed % 3);
    check_op_sandwich(approx_radius(sim, g, eps), eccentricity_stats(g).radius, eps);
  }
}

TEST_CASE("single edge pairwise estimates") {
  WeightedGraph g(2, {{0, 1, 37}});
  Simulator sim;
  FractionTable t = approx_apsp_scales(sim, g, Fraction(1, 3));
  check_op_sandwich(t.values[0][1], 37, Fraction(1, 3));
  check_op_sandwich(t.values[1][0], 37, Fraction(1, 3));
  CHECK(t.values[0][0] == Fraction::whole(0));
}

TEST_CASE("triangle pairwise estimate for the far pair") {
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
  Simulator sim;
  FractionTable t = approx_apsp_scales(sim, g, Fraction(1, 3));
  check_op_sandwich(t.values[0][2], 2, Fraction(1, 3));
}

TEST_CASE("pairwise sandwich on random graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    WeightedGraph g = gen_erdos_renyi(8 + seed % 9, 0.35, 10, seed * 11);
    Simulator sim;
    Fraction eps(1, 3);
    FractionTable t = approx_apsp_scales(sim, g, eps);
    DistanceTable exact = all_pairs_dijkstra(g);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v) check_op_sandwich(t.values[u][v], exact.values[u][v], eps);
  }
}

TEST_CASE("near linear all pairs equals the per source rows") {
  WeightedGraph g = gen_erdos_renyi(10, 0.35, 7, 3);
  Fraction eps(1, 2);
  Simulator sim;
  FractionTable t = apsp_linear(sim, g, eps, 17);
  for (NodeId s = 0; s < g.n(); ++s) {
    Simulator solo;
    MultiSourceResult r = bounded_hop_sssp(solo, g, s, g.n(), eps);
    CHECK(t.values[s] == r.table.values[0]);
  }
}

TEST_CASE("near linear all pairs sandwich") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    WeightedGraph g = gen_erdos_renyi(8 + seed % 8, 0.3, 9, seed * 2);
    Simulator sim;
    Fraction eps(1, 3);
    FractionTable t = apsp_linear(sim, g, eps, seed);
    DistanceTable exact = all_pairs_dijkstra(g);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v) check_op_sandwich(t.values[u][v], exact.values[u][v], eps);
  }
}

}  // TEST_SUITE
