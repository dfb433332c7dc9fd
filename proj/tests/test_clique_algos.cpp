#include <doctest.h>

#include "congest/clique.hpp"
#include "congest/generators.hpp"
#include "congest/oracles.hpp"

using namespace congest;

TEST_SUITE("clique_algos") {

TEST_CASE("three node clique, indirect route wins") {
  WeightedGraph g(3, {{0, 1, 5}, {1, 2, 1}, {0, 2, 1}});
  Simulator sim;
  CliqueSsspResult r = clique_sssp_exact(sim, g, 0);
  CHECK(r.table.values[0] == std::vector<Weight>{0, 2, 1});
}

TEST_CASE("non complete input is rejected") {
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
  Simulator sim;
  bool threw = false;
  try {
    clique_sssp_exact(sim, g, 0);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == Err::NotComplete);
  }
  CHECK(threw);
}

TEST_CASE("metric weights settle in one relaxation sweep") {
  // strict triangle inequality: reweighting changes nothing, hop budget 1
  WeightedGraph g(4, {{0, 1, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 4}, {1, 3, 5}, {2, 3, 4}});
  Simulator sim;
  CliqueSsspResult r = clique_sssp_exact(sim, g, 0);
  CHECK(r.table.values[0] == dijkstra(g, 0));
  CHECK(r.phase2_rounds <= 2);
}

TEST_CASE("exact distances and bounded relaxation rounds on random cliques") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 4 + static_cast<int>(seed) % 29;
    WeightedGraph g = gen_complete(n, 1 + seed % 64, seed * 3);
    Simulator sim;
    NodeId s = static_cast<NodeId>(seed % n);
    CliqueSsspResult r = clique_sssp_exact(sim, g, s);
    CHECK(r.table.values[0] == dijkstra(g, s));
    CHECK(r.phase2_rounds <= ceil_div(4 * n, isqrt_ceil(n)) + 1);
    CHECK(sim.trace.rounds <= 4 * isqrt_ceil(n) + 2 * isqrt_ceil(n) + 4);
  }
}

TEST_CASE("pairs inside a shortcut set come out exact") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int n = 9 + static_cast<int>(seed);
    WeightedGraph g = gen_complete(n, 40, seed);
    Simulator sim;
    CliqueApspResult r = clique_apsp_approx(sim, g, Fraction(1, 3), seed);
    DistanceTable exact = all_pairs_dijkstra(g);
    ShortcutSet s = shortcuts_from_union(union_k_smallest(g, isqrt_ceil(n)), isqrt_ceil(n));
    for (NodeId u = 0; u < g.n(); ++u)
      for (auto [v, d] : s.nearest[u]) {
        (void)d;
        CHECK(r.table.values[u][v] == to_fraction(exact.values[u][v]));
      }
  }
}

TEST_CASE("small cliques sample every node: compositional bound") {
  // sqrt(n)*log2(n) >= n up to n = 8, so the sampled set is everything and
  // the guarantee tightens to 2*(1+eps)
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WeightedGraph g = gen_complete(8, 30, seed * 7);
    Simulator sim;
    Fraction eps(1, 3);
    CliqueApspResult r = clique_apsp_approx(sim, g, eps, seed);
    CHECK_FALSE(r.hitting_failure);
    DistanceTable exact = all_pairs_dijkstra(g);
    Fraction cap = Fraction::whole(2) * (Fraction::whole(1) + eps);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v) {
        CHECK(r.table.values[u][v] >= to_fraction(exact.values[u][v]));
        CHECK(r.table.values[u][v] <= cap * to_fraction(exact.values[u][v]));
      }
  }
}

TEST_CASE("estimates never drop below the true distance") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    int n = 10 + static_cast<int>(seed * 2) % 23;
    WeightedGraph g = gen_complete(n, 25, seed * 13);
    Simulator sim;
    CliqueApspResult r = clique_apsp_approx(sim, g, Fraction(1, 3), seed);
    DistanceTable exact = all_pairs_dijkstra(g);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v)
        CHECK(r.table.values[u][v] >= to_fraction(exact.values[u][v]));
  }
}

TEST_CASE("locally assembled graph: two nodes") {
  CliqueLocalView view;
  view.n = 2;
  view.nearest.k = 1;
  view.nearest.nearest = {{{1, 6}}, {{0, 6}}};
  view.wprime_row = {0, 6};
  ScaledGraph sg = build_gu(view, 0);
  REQUIRE(sg.g.m() == 1);
  CHECK(sg.g.edge(0).w == 6 * sg.denom);
}

TEST_CASE("locally assembled graph: full shortcut coverage is the metric completion") {
  WeightedGraph g = gen_complete(6, 15, 4);
  DistanceTable exact = all_pairs_dijkstra(g);
  ShortcutSet s = shortcuts_from_union(union_k_smallest(g, 5), 5);
  for (NodeId u = 0; u < g.n(); ++u) {
    CliqueLocalView view;
    view.n = g.n();
    view.nearest = s;
    view.wprime_row.assign(g.n(), kInf);
    view.wprime_row[u] = 0;
    for (auto [v, d] : s.nearest[u]) view.wprime_row[v] = d;
    ScaledGraph sg = build_gu(view, u);
    auto d = dijkstra(sg.g, u);
    for (NodeId v = 0; v < g.n(); ++v) CHECK(d[v] == exact.values[u][v] * sg.denom);
  }
}

TEST_CASE("locally assembled graph never underestimates") {
  WeightedGraph g = gen_complete(9, 22, 8);
  DistanceTable exact = all_pairs_dijkstra(g);
  int k = isqrt_ceil(g.n());
  ShortcutSet s = shortcuts_from_union(union_k_smallest(g, k), k);
  for (NodeId u = 0; u < g.n(); ++u) {
    CliqueLocalView view;
    view.n = g.n();
    view.nearest = s;
    view.wprime_row.assign(g.n(), kInf);
    view.wprime_row[u] = 0;
    for (auto a = g.adj_begin(u); a != g.adj_end(u); ++a) view.wprime_row[a->to] = a->w;
    for (auto [v, d] : s.nearest[u])
      view.wprime_row[v] = std::min(view.wprime_row[v], d);
    view.sampled = {0, 3};
    for (NodeId r : view.sampled) {
      std::vector<Fraction> row;
      for (NodeId v = 0; v < g.n(); ++v) row.push_back(to_fraction(exact.values[r][v]));
      view.dprime.push_back(row);
    }
    ScaledGraph sg = build_gu(view, u);
    auto d = dijkstra(sg.g, u);
    for (NodeId v = 0; v < g.n(); ++v)
      CHECK(to_fraction(d[v]) >= to_fraction(exact.values[u][v]) * Fraction::whole(sg.denom));
  }
}

}  // TEST_SUITE
