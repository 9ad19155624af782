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

// One CSV row per simulation run. Schema version 1:
//   N,f_crashed,commits,verify_msgs,total_msgs,wallclock
// commits counts client-confirmed requests; wallclock is the simulated time
// of the last processed event in ms, so rows are reproducible.

#ifndef PCFT_SIM_METRICS_CSV_H_
#define PCFT_SIM_METRICS_CSV_H_

#include <string>

#include "pcft/sim/simulator.h"

namespace pcft::sim {

inline constexpr int kMetricsSchemaVersion = 1;

struct MetricsRow {
  uint32_t n;
  uint32_t f_crashed;
  uint64_t commits;
  uint64_t verify_msgs;
  uint64_t total_msgs;
  uint64_t wallclock_ms;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

MetricsRow metrics_row(const SimConfig& config, const Trace& trace);
std::string metrics_csv_header();
std::string metrics_csv_line(const MetricsRow& row);

}  // namespace pcft::sim

#endif  // PCFT_SIM_METRICS_CSV_H_
