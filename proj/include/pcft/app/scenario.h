// Copyright 2026 The pcft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named simulator scenarios with a pass/fail postcondition each.

#ifndef PCFT_APP_SCENARIO_H_
#define PCFT_APP_SCENARIO_H_

#include <optional>
#include <string>
#include <vector>

#include "pcft/sim/metrics_csv.h"
#include "pcft/sim/simulator.h"
#include "pcft/sim/trace_checker.h"

namespace pcft::app {

inline constexpr const char* kScenarioNames[] = {
    "happy", "crash-f", "crash-f-plus-1", "primary-crash-viewchange", "equivocation", "sweep-n"};

bool is_scenario(const std::string& name);

struct ScenarioOptions {
  uint32_t n = 5;
  uint64_t seed = 1;
  crypto::BackendId backend = crypto::BackendId::kProductionCurve;
  uint64_t horizon_ms = 5000;
  // Replaces the scenario's own crash choice when set.
  std::optional<std::vector<sim::CrashSpec>> crashes;
};

struct ScenarioRun {
  sim::SimConfig config;
  sim::Trace trace;
  sim::MetricsRow row;
  sim::CheckReport check;
};

struct ScenarioOutcome {
  std::string name;
  bool passed = false;
  std::string summary;          // one line per run, then the verdict
  std::vector<ScenarioRun> runs;  // sweep-n has one per N
};

// Throws Error(kConfigError) for an unknown name or invalid options. Even N
// is accepted only by "happy".
ScenarioOutcome run_scenario(const std::string& name, const ScenarioOptions& opts);

// The f = (N-1)/2 (or f + 1 when `plus_one`) nodes crashed at t = 0 by the
// crash scenarios: a seeded uniform choice of distinct indices.
std::vector<sim::CrashSpec> choose_crashes(uint32_t n, bool plus_one, uint64_t seed);

inline constexpr uint32_t kSweepSizes[] = {3, 5, 7, 9, 11};

}  // namespace pcft::app

#endif  // PCFT_APP_SCENARIO_H_
