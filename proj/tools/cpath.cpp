#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congest/experiment.hpp"
#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/oracles.hpp"

namespace {

using namespace congest;

int cmd_gen(const GenConfig& cfg, const std::string& out) {
  WeightedGraph g = generate(cfg);
  if (out.empty()) {
    write_graph(std::cout, g);
  } else {
    write_graph_file(out, g);
    std::cerr << "wrote " << out << " (n=" << g.n() << " m=" << g.m() << ")\n";
  }
  return 0;
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides,
            const std::string& output_flag) {
  std::string text;
  {
    std::ifstream in(config_path);
    require(in.good(), Err::InvalidInput, "cannot open config: " + config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  // Flat overrides are appended as extra key=value lines; for a JSON config
  // they are applied by re-parsing the merged flat form of the same keys.
  if (!overrides.empty()) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      fail(Err::InvalidInput, "--set is only supported with key=value configs");
    for (const std::string& kv : overrides) text += "\n" + kv;
  }
  ExperimentConfig cfg = parse_config_text(text);
  if (!output_flag.empty()) cfg.output = output_flag;

  ExperimentReport report = run_experiment(cfg);
  std::string csv = report.csv();
  if (cfg.output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(cfg.output);
    require(out.good(), Err::InvalidInput, "cannot write " + cfg.output);
    out << csv;
    std::string sidecar = cfg.output;
    if (sidecar.size() > 4 && sidecar.substr(sidecar.size() - 4) == ".csv")
      sidecar.resize(sidecar.size() - 4);
    sidecar += ".json";
    std::ofstream js(sidecar);
    require(js.good(), Err::InvalidInput, "cannot write " + sidecar);
    js << report.summary_json() << "\n";
    std::cerr << "wrote " << cfg.output << " and " << sidecar << "\n";
  }
  for (const auto& row : report.rows)
    if (!row.error.empty())
      std::cerr << "row " << row.instance << " seed " << row.seed << ": " << row.error << "\n";
  return report.exit_code;
}

int cmd_oracle(const std::string& graph_path, int source, bool apsp) {
  WeightedGraph g = read_graph_file(graph_path);
  if (source >= 0) {
    require(source < g.n(), Err::InvalidInput, "source out of range");
    std::vector<Weight> d = dijkstra(g, source);
    for (NodeId v = 0; v < g.n(); ++v) {
      std::cout << source << ' ' << v << ' ';
      if (d[v] == kInf)
        std::cout << "inf\n";
      else
        std::cout << d[v] << '\n';
    }
    return 0;
  }
  if (apsp) {
    DistanceTable t = all_pairs_dijkstra(g);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v) {
        std::cout << u << ' ' << v << ' ';
        if (t.values[u][v] == kInf)
          std::cout << "inf\n";
        else
          std::cout << t.values[u][v] << '\n';
      }
    return 0;
  }
  EccentricityStats st = eccentricity_stats(g);
  std::cout << "n=" << g.n() << " m=" << g.m() << " diameter=" << st.diameter
            << " radius=" << st.radius << " hop_diameter=" << st.hop_diameter
            << " spd=" << shortest_path_diameter(g) << "\n";
  return 0;
}

struct CsvRow {
  std::string instance;
  std::string algorithm;
  std::int64_t rounds = 0;
  std::int64_t max_edge_load = 0;
  Fraction ratio = Fraction::whole(1);
  bool exact = false;
  bool errored = false;
};

Fraction parse_ratio(const std::string& s) {
  if (s == "inf") return Fraction::inf();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Fraction::whole(std::stoll(s));
  return Fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int cmd_report(const std::vector<std::string>& files) {
  std::vector<CsvRow> rows;
  for (const std::string& path : files) {
    std::ifstream in(path);
    require(in.good(), Err::InvalidInput, "cannot open " + path);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (header) {
        header = false;
        require(line.rfind("instance,seed,algorithm,", 0) == 0, Err::InvalidInput,
                path + ": not a run csv");
        continue;
      }
      if (line.empty()) continue;
      std::vector<std::string> cols;
      std::stringstream ss(line);
      std::string col;
      while (std::getline(ss, col, ',')) cols.push_back(col);
      while (cols.size() < 12) cols.push_back("");
      require(cols.size() == 12, Err::InvalidInput, path + ": bad row: " + line);
      CsvRow r;
      r.instance = cols[0];
      r.algorithm = cols[2];
      try {
        r.rounds = std::stoll(cols[5]);
        r.max_edge_load = std::stoll(cols[6]);
        r.ratio = parse_ratio(cols[8]);
        r.exact = cols[9] == "1";
      } catch (const std::exception&) {
        fail(Err::InvalidInput, path + ": bad row: " + line);
      }
      r.errored = !cols[11].empty();
      rows.push_back(std::move(r));
    }
  }

  struct Agg {
    std::int64_t rows = 0;
    std::int64_t errors = 0;
    std::int64_t exact = 0;
    std::int64_t max_rounds = 0;
    std::int64_t max_load = 0;
    Fraction worst = Fraction::whole(1);
  };
  std::map<std::string, Agg> by_algo;
  for (const CsvRow& r : rows) {
    Agg& a = by_algo[r.algorithm];
    ++a.rows;
    if (r.errored) {
      ++a.errors;
      continue;
    }
    if (r.exact) ++a.exact;
    a.max_rounds = std::max(a.max_rounds, r.rounds);
    a.max_load = std::max(a.max_load, r.max_edge_load);
    if (r.ratio > a.worst) a.worst = r.ratio;
  }
  std::cout << "algorithm,rows,errors,exact,worst_ratio,max_rounds,max_edge_load\n";
  for (const auto& [algo, a] : by_algo)
    std::cout << algo << ',' << a.rows << ',' << a.errors << ',' << a.exact << ','
              << a.worst.str() << ',' << a.max_rounds << ',' << a.max_load << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congest shortest-path toolbench"};
  app.require_subcommand(1);

  GenConfig gen_cfg;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("--family", gen_cfg.family,
                  "path|cycle|star|complete|grid|erdos_renyi|geometric");
  gen->add_option("--n", gen_cfg.n, "node count");
  gen->add_option("--density", gen_cfg.density, "edge probability / radius");
  gen->add_option("--w-max", gen_cfg.w_max, "max edge weight");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");
  gen->add_option("-o,--out", gen_out, "output file (default: stdout)");

  std::string run_config;
  std::string run_output;
  std::vector<std::string> run_sets;
  auto* run = app.add_subcommand("run", "run an experiment from a config");
  run->add_option("config", run_config, "config file (key=value lines or json)")->required();
  run->add_option("-o,--output", run_output, "csv output path (json sidecar next to it)");
  run->add_option("--set", run_sets, "override a config key, key=value");

  std::string oracle_graph;
  int oracle_source = -1;
  bool oracle_apsp = false;
  auto* oracle = app.add_subcommand("oracle", "exact answers for a graph file");
  oracle->add_option("graph", oracle_graph, "graph file")->required();
  oracle->add_option("--source", oracle_source, "print exact distances from this node");
  oracle->add_flag("--apsp", oracle_apsp, "print all exact pairwise distances");

  std::vector<std::string> report_files;
  auto* report = app.add_subcommand("report", "aggregate run csv files");
  report->add_option("files", report_files, "csv files from `run`")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_cfg, gen_out);
    if (run->parsed()) return cmd_run(run_config, run_sets, run_output);
    if (oracle->parsed()) return cmd_oracle(oracle_graph, oracle_source, oracle_apsp);
    if (report->parsed()) return cmd_report(report_files);
  } catch (const congest::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
