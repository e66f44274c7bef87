#pragma once

#include <string>
#include <vector>

#include "detline/generate.hpp"
#include "detline/json_io.hpp"

namespace detline {

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  json first_counterexample;  // null when failures == 0
  double wall_ms = 0.0;
};

json to_json(const SuiteReport& r);

const std::vector<std::string>& suite_names();

// Runs one named identity suite; conv == nullptr means the baseline system.
SuiteReport run_suite(const std::string& name, const GenConfig& cfg,
                      const ConventionSystem* conv = nullptr);

std::vector<SuiteReport> run_all_suites(const GenConfig& cfg,
                                        const ConventionSystem* conv = nullptr);

}  // namespace detline
