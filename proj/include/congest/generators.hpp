#pragma once

#include <string>
#include <vector>

#include "congest/graph.hpp"
#include "congest/rng.hpp"

namespace congest {

// Random weights drawn uniformly from [1, w_max]; w_max == 1 gives unit weights.
struct GenConfig {
  std::string family = "erdos_renyi";
  int n = 16;
  double density = 0.25;   // edge probability for erdos_renyi
  Weight w_max = 1;
  std::uint64_t seed = 1;
};

WeightedGraph gen_path(int n, Weight w_max, std::uint64_t seed);
WeightedGraph gen_cycle(int n, Weight w_max, std::uint64_t seed);
WeightedGraph gen_star(int n, Weight w_max, std::uint64_t seed);
WeightedGraph gen_complete(int n, Weight w_max, std::uint64_t seed);
WeightedGraph gen_grid(int rows, int cols, Weight w_max, std::uint64_t seed);

// Connected by construction: a random spanning tree is always included.
WeightedGraph gen_erdos_renyi(int n, double p, Weight w_max, std::uint64_t seed);

// Unit square, nodes joined when within the given radius, plus spanning tree.
WeightedGraph gen_geometric(int n, double radius, Weight w_max, std::uint64_t seed);

WeightedGraph generate(const GenConfig& cfg);

}  // namespace congest
