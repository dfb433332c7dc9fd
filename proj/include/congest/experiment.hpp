#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congest/fraction.hpp"
#include "congest/generators.hpp"

namespace congest {

// One batch: an algorithm, a graph source (generator or file), and the seed
// grid to sweep. Parsed from flat key=value text or a JSON object.
struct ExperimentConfig {
  std::string algorithm = "dijkstra";
  GenConfig gen;
  std::string graph_file;  // overrides the generator when nonempty
  int instances = 1;
  std::vector<std::uint64_t> seeds{1};
  Fraction eps{0, 1};  // 0 selects the default parameter for the instance size
  std::int64_t h = 0;  // 0 selects n
  int k = 0;           // 0 selects ceil(sqrt(n))
  std::string policy = "record";
  std::string output;  // report path; empty means stdout
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct ExperimentRow {
  std::string instance;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  std::int64_t rounds = 0;
  std::int64_t max_edge_load = 0;
  std::int64_t total_messages = 0;
  Fraction max_ratio = Fraction::whole(1);  // worst output/exact over the checked values
  bool exact = false;
  double wall_ms = 0;
  std::string error;  // empty on success
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;  // sorted by (instance, seed)
  int exit_code = 0;                // 0 clean, 3 when any row errored

  // Fixed columns; identical configs give identical bytes apart from wall_ms.
  std::string csv() const;
  // Config echo plus aggregates, for the sidecar file.
  std::string summary_json() const;
};

// Runs every (instance, seed) row, each on its own simulator, workers in
// parallel; oracle tables are cached by graph content.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

const std::vector<std::string>& algorithm_ids();

}  // namespace congest
