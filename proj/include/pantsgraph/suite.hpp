#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pantsgraph/surface.hpp"

namespace pg {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int pairs = 2000;    // sampled pairs or triples per property
  int fixtures = 24;   // constructed fixtures per property
  int budget = 2;      // height budget for searches
  int level = -1;      // -1 runs levels 1..4
};

struct CheckRecord {
  std::string claim;
  int level = -1;
  bool pass = false;
  long long checked = 0;
  long long violations = 0;
  nlohmann::json detail = nlohmann::json::object();

  nlohmann::json to_json() const;
};

std::vector<std::string> suite_claims();

// Runs the battery in a fixed order. `emit` sees each record as soon as it is final.
std::vector<CheckRecord> run_suite(const SurfaceModel& model, const SuiteConfig& config,
                                   const std::function<void(const CheckRecord&)>& emit = {});

}  // namespace pg
