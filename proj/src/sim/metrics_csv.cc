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

#include "pcft/sim/metrics_csv.h"

#include <set>

namespace pcft::sim {

MetricsRow metrics_row(const SimConfig& config, const Trace& trace) {
  std::set<uint32_t> crashed;
  for (const CrashSpec& c : config.crash_schedule) crashed.insert(c.node);
  const Metrics& m = trace.metrics;
  return MetricsRow{config.n,
                    static_cast<uint32_t>(crashed.size()),
                    m.completed,
                    m.sent_of(MessageKind::kVerify),
                    m.consensus_messages(),
                    m.last_event_ms};
}

std::string metrics_csv_header() { return "N,f_crashed,commits,verify_msgs,total_msgs,wallclock"; }

std::string metrics_csv_line(const MetricsRow& r) {
  return std::to_string(r.n) + "," + std::to_string(r.f_crashed) + "," +
         std::to_string(r.commits) + "," + std::to_string(r.verify_msgs) + "," +
         std::to_string(r.total_msgs) + "," + std::to_string(r.wallclock_ms);
}

}  // namespace pcft::sim
