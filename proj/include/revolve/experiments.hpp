#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revolve/quadrature.hpp"

namespace revolve::experiments {

struct RunContext {
  std::string out_dir = "out"; ///< artifacts land in out_dir/<scenario id>/
  QuadratureConfig cfg{};
  std::uint64_t seed = 0; ///< base seed for the randomized scenarios
};

struct Metric {
  std::string name;
  double value = 0.0;
};

struct ScenarioResult {
  std::string id;
  bool pass = false;
  std::vector<Metric> metrics;
  std::string notes;
};

/// Registered scenario ids in their canonical order.
const std::vector<std::string>& scenario_ids();
bool scenario_known(const std::string& id);

/// Runs one scenario and writes its artifacts (metrics.csv, verdict.json,
/// sometimes curve.svg) under ctx.out_dir/<id>/. Computational failures
/// come back as a failed verdict carrying the diagnostic; only an unknown
/// id throws.
ScenarioResult run_scenario(const std::string& id, const RunContext& ctx);

std::vector<ScenarioResult> run_all(const RunContext& ctx);

} // namespace revolve::experiments
