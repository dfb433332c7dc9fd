#include "congest/sim.hpp"

#include <json.hpp>

namespace congest {

std::string SimTrace::to_json() const {
  nlohmann::json j;
  j["rounds"] = rounds;
  j["max_edge_load"] = max_edge_load;
  j["total_messages"] = total_messages;
  j["seed"] = rng_seed;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [load, count] : load_histogram) hist[std::to_string(load)] = count;
  j["loads"] = hist;
  if (failure) {
    j["failure"] = {{"round", failure->round},
                    {"from", failure->from},
                    {"to", failure->to},
                    {"load", failure->load}};
  } else {
    j["failure"] = nullptr;
  }
  if (!per_round_loads.empty()) {
    nlohmann::json detail = nlohmann::json::array();
    for (const auto& ev : per_round_loads)
      detail.push_back({{"round", ev.round}, {"from", ev.from}, {"to", ev.to}, {"count", ev.count}});
    j["per_round_loads"] = detail;
  }
  return j.dump(2);
}

}  // namespace congest
