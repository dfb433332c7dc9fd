#include "congest/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "congest/clique.hpp"
#include "congest/metrics.hpp"
#include "congest/oracles.hpp"
#include "congest/overlay.hpp"
#include "congest/rounding.hpp"
#include "congest/scaling.hpp"
#include "congest/shortcuts.hpp"

namespace congest {
namespace {

const std::vector<std::string> kAlgorithms = {
    "dijkstra",       "bounded_hop_sssp", "multi_source",   "apsp_linear",
    "approx_diameter", "approx_radius",    "approx_apsp",    "shortcut_graph",
    "clique_sssp",    "clique_apsp",      "sublinear_sssp", "exact_apsp",
};

Fraction parse_eps(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Fraction(std::stoll(text), 1);
    return Fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(Err::InvalidInput, "bad eps value: " + text);
  }
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      fail(Err::InvalidInput, "bad seed value: " + item);
    }
  }
  return out;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "algorithm") cfg.algorithm = value;
    else if (key == "family") cfg.gen.family = value;
    else if (key == "n") cfg.gen.n = std::stoi(value);
    else if (key == "density") cfg.gen.density = std::stod(value);
    else if (key == "w_max") cfg.gen.w_max = std::stoll(value);
    else if (key == "gen_seed") cfg.gen.seed = std::stoull(value);
    else if (key == "graph_file") cfg.graph_file = value;
    else if (key == "instances") cfg.instances = std::stoi(value);
    else if (key == "seeds") cfg.seeds = parse_seeds(value);
    else if (key == "eps") cfg.eps = parse_eps(value);
    else if (key == "h") cfg.h = std::stoll(value);
    else if (key == "k") cfg.k = std::stoi(value);
    else if (key == "policy") cfg.policy = value;
    else if (key == "output") cfg.output = value;
    else fail(Err::InvalidInput, "unknown config key: " + key);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::InvalidInput, "bad value for " + key + ": " + value);
  }
}

void validate(const ExperimentConfig& cfg) {
  require(std::find(kAlgorithms.begin(), kAlgorithms.end(), cfg.algorithm) != kAlgorithms.end(),
          Err::InvalidInput, "unknown algorithm: " + cfg.algorithm);
  require(cfg.instances >= 1, Err::InvalidInput, "instances must be >= 1");
  require(!cfg.seeds.empty(), Err::InvalidInput, "need at least one seed");
  require(cfg.gen.n >= 1, Err::InvalidInput, "n must be >= 1");
  require(cfg.gen.w_max >= 1, Err::InvalidInput, "w_max must be >= 1");
  require(cfg.gen.density >= 0.0 && cfg.gen.density <= 1.0, Err::InvalidInput,
          "density must be in [0, 1]");
  require(cfg.eps.num >= 0 && !cfg.eps.is_inf(), Err::InvalidInput, "eps must be finite");
  require(cfg.h >= 0 && cfg.k >= 0, Err::InvalidInput, "h and k must be >= 0");
  require(cfg.policy == "record" || cfg.policy == "failfast" || cfg.policy == "queue",
          Err::InvalidInput, "policy must be record, failfast or queue");
}

CapacityPolicy parse_policy(const std::string& p) {
  if (p == "failfast") return CapacityPolicy::FailFast;
  if (p == "queue") return CapacityPolicy::Queue;
  return CapacityPolicy::RecordOnly;
}

// Exact tables shared across rows that run on the same graph.
class OracleCache {
 public:
  const DistanceTable& all_pairs(const WeightedGraph& g) {
    std::uint64_t key = g.content_hash();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, all_pairs_dijkstra(g)).first;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::uint64_t, DistanceTable> cache_;
};

Fraction ratio_of(const Fraction& out, Weight exact) {
  if (exact == 0 || exact == kInf || out.is_inf()) return Fraction::whole(1);
  return reduced_128(static_cast<__int128>(out.num), static_cast<__int128>(out.den) * exact);
}

void fold_ratio(Fraction& worst, const Fraction& r) {
  if (r > worst) worst = r;
}

struct RowOutcome {
  Fraction max_ratio = Fraction::whole(1);
  RunStats ignored;
};

Fraction table_ratio(const FractionTable& got, const DistanceTable& exact,
                     const std::vector<NodeId>& sources) {
  Fraction worst = Fraction::whole(1);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto& row = got.values[i];
    const auto& ref = exact.values[sources[i]];
    for (std::size_t v = 0; v < row.size(); ++v) fold_ratio(worst, ratio_of(row[v], ref[v]));
  }
  return worst;
}

Fraction int_table_ratio(const DistanceTable& got, const DistanceTable& exact) {
  Fraction worst = Fraction::whole(1);
  for (std::size_t i = 0; i < got.values.size(); ++i)
    for (std::size_t v = 0; v < got.values[i].size(); ++v)
      fold_ratio(worst, ratio_of(to_fraction(got.values[i][v]),
                                 exact.values[got.sources[i]][v]));
  return worst;
}

Fraction run_algorithm(const ExperimentConfig& cfg, const WeightedGraph& g, std::uint64_t seed,
                       Simulator& sim, OracleCache& oracles) {
  const std::string& a = cfg.algorithm;
  Fraction eps = cfg.eps.num == 0 ? default_eps(g.n()) : cfg.eps;
  std::int64_t h = cfg.h == 0 ? g.n() : cfg.h;
  int k = cfg.k == 0 ? static_cast<int>(isqrt_ceil(g.n())) : cfg.k;

  if (a == "dijkstra") {
    const DistanceTable& exact = oracles.all_pairs(g);
    Fraction worst = Fraction::whole(1);
    for (NodeId s = 0; s < g.n(); ++s) {
      std::vector<Weight> d = dijkstra(g, s);
      for (NodeId v = 0; v < g.n(); ++v)
        fold_ratio(worst, ratio_of(to_fraction(d[v]), exact.values[s][v]));
    }
    return worst;
  }
  if (a == "bounded_hop_sssp") {
    MultiSourceResult r = bounded_hop_sssp(sim, g, 0, h, eps);
    return table_ratio(r.table, oracles.all_pairs(g), {0});
  }
  if (a == "multi_source" || a == "apsp_linear") {
    std::vector<NodeId> sources(g.n());
    for (NodeId u = 0; u < g.n(); ++u) sources[u] = u;
    MultiSourceResult r = multi_source_bounded_hop(sim, g, sources, h, eps, seed);
    return table_ratio(r.table, oracles.all_pairs(g), sources);
  }
  if (a == "approx_diameter" || a == "approx_radius") {
    EccentricityStats st = eccentricity_stats(g);
    Fraction out = a == "approx_diameter" ? approx_diameter(sim, g, eps) : approx_radius(sim, g, eps);
    return ratio_of(out, a == "approx_diameter" ? st.diameter : st.radius);
  }
  if (a == "approx_apsp") {
    FractionTable t = approx_apsp_scales(sim, g, eps);
    return table_ratio(t, oracles.all_pairs(g), t.sources);
  }
  if (a == "shortcut_graph") {
    WeightedGraph sg = shortcut_graph(g, k);
    DistanceTable got = all_pairs_dijkstra(sg);
    return int_table_ratio(got, oracles.all_pairs(g));
  }
  if (a == "clique_sssp") {
    CliqueSsspResult r = clique_sssp_exact(sim, g, 0);
    return int_table_ratio(r.table, oracles.all_pairs(g));
  }
  if (a == "clique_apsp") {
    CliqueApspResult r = clique_apsp_approx(sim, g, eps, seed);
    return table_ratio(r.table, oracles.all_pairs(g), r.table.sources);
  }
  if (a == "sublinear_sssp") {
    SublinearSsspResult r = sublinear_sssp(sim, g, 0, seed);
    return table_ratio(r.table, oracles.all_pairs(g), {0});
  }
  if (a == "exact_apsp") {
    ExactApspResult r = exact_apsp(sim, g, seed);
    return int_table_ratio(r.table, oracles.all_pairs(g));
  }
  fail(Err::InvalidInput, "unknown algorithm: " + a);
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
      fail(Err::InvalidInput, std::string("bad json config: ") + ex.what());
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "seeds" && value.is_array()) {
        cfg.seeds.clear();
        for (const auto& s : value) cfg.seeds.push_back(s.get<std::uint64_t>());
      } else if (value.is_string()) {
        apply_key(cfg, key, value.get<std::string>());
      } else {
        apply_key(cfg, key, value.dump());
      }
    }
  } else {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        require(line.find_first_not_of(" \t\r") == std::string::npos, Err::InvalidInput,
                "config line without '=': " + line);
        continue;
      }
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::InvalidInput, "cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

const std::vector<std::string>& algorithm_ids() { return kAlgorithms; }

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;

  struct Job {
    std::string instance;
    int instance_idx;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  int instances = cfg.graph_file.empty() ? cfg.instances : 1;
  for (int i = 0; i < instances; ++i) {
    std::string name;
    if (!cfg.graph_file.empty()) {
      name = "file:" + cfg.graph_file;
    } else {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "gen-%03d", i);
      name = buf;
    }
    for (std::uint64_t s : cfg.seeds) jobs.push_back({name, i, s});
  }
  report.rows.resize(jobs.size());

  OracleCache oracles;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= jobs.size()) break;
      const Job& job = jobs[idx];
      ExperimentRow& row = report.rows[idx];
      row.instance = job.instance;
      row.seed = job.seed;
      auto start = std::chrono::steady_clock::now();
      try {
        WeightedGraph g = cfg.graph_file.empty()
                              ? [&] {
                                  GenConfig gen = cfg.gen;
                                  gen.seed = cfg.gen.seed + static_cast<std::uint64_t>(job.instance_idx);
                                  return generate(gen);
                                }()
                              : read_graph_file(cfg.graph_file);
        row.n = g.n();
        row.m = g.m();
        Simulator sim(SimConfig{job.seed, 1, parse_policy(cfg.policy), 500'000'000, false});
        row.max_ratio = run_algorithm(cfg, g, job.seed, sim, oracles);
        row.rounds = sim.trace.rounds;
        row.max_edge_load = sim.trace.max_edge_load;
        row.total_messages = sim.trace.total_messages;
        row.exact = row.max_ratio == Fraction::whole(1);
      } catch (const std::exception& ex) {
        row.error = ex.what();
      }
      row.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ExperimentRow& a, const ExperimentRow& b) {
                     return a.instance != b.instance ? a.instance < b.instance : a.seed < b.seed;
                   });
  for (const auto& row : report.rows)
    if (!row.error.empty()) report.exit_code = 3;
  return report;
}

std::string ExperimentReport::csv() const {
  std::stringstream out;
  out << "instance,seed,algorithm,n,m,rounds,max_edge_load,total_messages,max_ratio,exact,"
         "wall_ms,error\n";
  for (const auto& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
    out << r.instance << ',' << r.seed << ',' << config.algorithm << ',' << r.n << ',' << r.m
        << ',' << r.rounds << ',' << r.max_edge_load << ',' << r.total_messages << ','
        << r.max_ratio.str() << ',' << (r.exact ? 1 : 0) << ',' << wall << ',' << err << '\n';
  }
  return out.str();
}

std::string ExperimentReport::summary_json() const {
  nlohmann::json j;
  j["algorithm"] = config.algorithm;
  j["family"] = config.gen.family;
  j["n"] = config.gen.n;
  j["density"] = config.gen.density;
  j["w_max"] = config.gen.w_max;
  j["gen_seed"] = config.gen.seed;
  j["graph_file"] = config.graph_file;
  j["instances"] = config.instances;
  j["seeds"] = config.seeds;
  j["eps"] = config.eps.str();
  j["h"] = config.h;
  j["k"] = config.k;
  j["policy"] = config.policy;

  std::int64_t errors = 0;
  std::int64_t exact_rows = 0;
  Fraction worst = Fraction::whole(1);
  std::vector<std::int64_t> rounds;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      ++errors;
      continue;
    }
    if (r.exact) ++exact_rows;
    if (r.max_ratio > worst) worst = r.max_ratio;
    rounds.push_back(r.rounds);
  }
  std::sort(rounds.begin(), rounds.end());
  j["rows"] = rows.size();
  j["errors"] = errors;
  j["exact_rows"] = exact_rows;
  j["worst_ratio"] = worst.str();
  if (!rounds.empty()) {
    j["rounds_p50"] = rounds[rounds.size() / 2];
    j["rounds_max"] = rounds.back();
  }
  j["exit_code"] = exit_code;
  return j.dump(2);
}

}  // namespace congest
