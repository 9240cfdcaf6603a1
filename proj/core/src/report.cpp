#include "geobary/report.hpp"

#include <algorithm>

namespace geobary {

bool all_pass(const Report& report) noexcept {
  return std::all_of(report.begin(), report.end(), [](const CheckRecord& r) { return r.pass; });
}

nlohmann::json to_json(const CheckRecord& record) {
  nlohmann::json j;
  j["check"] = record.check;
  j["params"] = record.params;
  j["pass"] = record.pass;
  j["margin"] = record.margin;
  j["samples"] = record.samples;
  if (record.witness) j["witness"] = *record.witness;
  return j;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : report) checks.push_back(to_json(r));
  return {{"pass", all_pass(report)}, {"checks", std::move(checks)}};
}

}  // namespace geobary
