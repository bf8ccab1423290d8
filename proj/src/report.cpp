#include "qcv/report.hpp"

#include <json.hpp>

namespace qcv {

std::string CheckReport::verdict() const {
  if (ok) return "verified-to-order";
  if (counterexample)
    return "counterexample(n=" + std::to_string(counterexample->first) +
           ", value=" + counterexample->second + ")";
  return "failed";
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["paper_ref"] = statement;
  j["order"] = order;
  j["instances"] = instances;
  j["verdict"] = verdict();
  j["millis"] = millis;
  j["conjectural"] = conjectural;
  return j.dump();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(nlohmann::json::parse(r.to_json()));
  return arr.dump(2);
}

}  // namespace qcv
