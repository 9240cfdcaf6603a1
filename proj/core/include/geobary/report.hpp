#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace geobary {

/// One named verification check. `margin` is the worst observed slack of
/// the checked inequality (negative means violated); `witness` holds the
/// offending configuration when the check fails.
struct CheckRecord {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  double margin = 0.0;
  std::size_t samples = 0;
  std::optional<nlohmann::json> witness;
};

using Report = std::vector<CheckRecord>;

bool all_pass(const Report& report) noexcept;

nlohmann::json to_json(const CheckRecord& record);
nlohmann::json to_json(const Report& report);

/// Accumulates the slack of an inequality over many samples and keeps the
/// first violating witness.
class SlackTracker {
 public:
  SlackTracker(std::string check, double tolerance) : record_{.check = std::move(check)}, tol_(tolerance) {
    record_.margin = std::numeric_limits<double>::infinity();
  }

  /// `slack` = rhs - lhs of an inequality lhs <= rhs.
  template <typename WitnessFn>
  void observe(double slack, WitnessFn&& witness) {
    ++record_.samples;
    if (slack < record_.margin) record_.margin = slack;
    if (!(slack >= -tol_)) {
      if (record_.pass) record_.witness = witness();
      record_.pass = false;
    }
  }

  void observe(double slack) {
    observe(slack, [] { return nlohmann::json(); });
  }

  CheckRecord& record() noexcept { return record_; }

  CheckRecord finish(nlohmann::json params = nlohmann::json::object()) {
    record_.params = std::move(params);
    if (record_.samples == 0) record_.margin = 0.0;
    return record_;
  }

 private:
  CheckRecord record_;
  double tol_;
};

}  // namespace geobary
