#include "eclab/eclab.hpp"

namespace sextic {

std::string to_csv(const std::vector<RousePoint>& family) {
  std::string out = "r,x,y,gap,gap_over_cbrt_x\n";
  for (const auto& p : family) {
    out += to_string(p.r) + "," + to_string(p.x) + "," + to_string(p.y) + "," + to_string(p.gap) +
           "," + gap_ratio(p.gap, p.x, 3) + "\n";
  }
  return out;
}

nlohmann::json to_json(const std::vector<RousePoint>& family, const Int& b1, const Int& b0) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : family) {
    rows.push_back({{"r", to_string(p.r)},
                    {"x", to_string(p.x)},
                    {"y", to_string(p.y)},
                    {"gap", to_string(p.gap)},
                    {"gap_over_cbrt_x", gap_ratio(p.gap, p.x, 3)}});
  }
  return {{"schema", "1"},
          {"family", "rouse"},
          {"b1", to_string(b1)},
          {"b0", to_string(b0)},
          {"points", rows}};
}

std::string to_csv(const std::vector<GapPoint>& points) {
  std::string out = "index,x,y,gap,gap_over_sqrt_x\n";
  for (const auto& p : points) {
    out += to_string(p.index) + "," + to_string(p.x) + "," + to_string(p.y) + "," +
           to_string(p.gap) + "," + p.ratio + "\n";
  }
  return out;
}

nlohmann::json to_json(const std::vector<GapPoint>& points, const std::string& source) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : points) {
    rows.push_back({{"index", to_string(p.index)},
                    {"x", to_string(p.x)},
                    {"y", to_string(p.y)},
                    {"gap", to_string(p.gap)},
                    {"gap_over_sqrt_x", p.ratio}});
  }
  return {{"schema", "1"}, {"family", source}, {"points", rows}};
}

std::string to_csv(const PellSolution& s) {
  std::string out = "u,v\n";
  for (const auto& [u, v] : s.solutions) out += to_string(u) + "," + to_string(v) + "\n";
  return out;
}

nlohmann::json to_json(const PellSolution& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [u, v] : s.solutions) rows.push_back(nlohmann::json::array({to_string(u), to_string(v)}));
  return {{"schema", "1"}, {"d", to_string(s.d)}, {"c", to_string(s.c)}, {"solutions", rows}};
}

}  // namespace sextic
