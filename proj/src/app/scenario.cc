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

#include "pcft/app/scenario.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "pcft/app/stats.h"
#include "pcft/common/error.h"

namespace pcft::app {

using protocol::MessageKind;
using sim::CrashSpec;
using sim::SimConfig;
using sim::Simulator;

bool is_scenario(const std::string& name) {
  return std::find(std::begin(kScenarioNames), std::end(kScenarioNames), name) !=
         std::end(kScenarioNames);
}

std::vector<CrashSpec> choose_crashes(uint32_t n, bool plus_one, uint64_t seed) {
  uint32_t count = (n - 1) / 2 + (plus_one ? 1 : 0);
  std::vector<uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates with a fixed draw rule so the choice does not
  // depend on the standard library.
  std::mt19937_64 rng(seed ^ 0x6372617368ULL);
  for (uint32_t i = 0; i < count; ++i) {
    uint32_t j = i + static_cast<uint32_t>(rng() % (n - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<CrashSpec> out;
  std::sort(idx.begin(), idx.begin() + count);
  for (uint32_t i = 0; i < count; ++i) out.push_back({0, idx[i]});
  return out;
}

namespace {

const std::vector<sim::WorkItem> kOneRequest = {{0, 0, "transfer 25 units to account 7"}};

SimConfig base_config(const ScenarioOptions& o, uint32_t n) {
  SimConfig c;
  c.n = n;
  c.rng_seed = o.seed;
  c.backend = o.backend;
  c.horizon_ms = o.horizon_ms;
  if (o.crashes) c.crash_schedule = *o.crashes;
  return c;
}

ScenarioRun finish(Simulator& s, const SimConfig& c) {
  ScenarioRun r;
  r.config = c;
  r.trace = s.run();
  r.row = sim::metrics_row(c, r.trace);
  r.check = sim::check_trace_lines(r.trace.lines);
  return r;
}

std::string describe(const ScenarioRun& r) {
  std::ostringstream out;
  const sim::Metrics& m = r.trace.metrics;
  out << "N=" << r.config.n << " crashed=" << r.row.f_crashed << " completed=" << m.completed
      << "/" << m.requests << " node_commits=" << m.node_commits
      << " verify=" << m.sent_of(MessageKind::kVerify)
      << " forward=" << m.sent_of(MessageKind::kForward) << " total=" << r.row.total_msgs
      << " view_adoptions=" << m.view_adoptions << " checks=" << (r.check.ok() ? "pass" : "FAIL");
  return out.str();
}

bool has_event(const sim::Trace& t, const std::string& event) {
  std::string needle = "\"event\":\"" + event + "\"";
  return std::any_of(t.lines.begin(), t.lines.end(),
                     [&](const std::string& l) { return l.find(needle) != std::string::npos; });
}

uint32_t crashed_count(const SimConfig& c) {
  std::set<uint32_t> s;
  for (const CrashSpec& x : c.crash_schedule) s.insert(x.node);
  return static_cast<uint32_t>(s.size());
}

}  // namespace

ScenarioOutcome run_scenario(const std::string& name, const ScenarioOptions& o) {
  if (!is_scenario(name)) throw Error(ErrorCode::kConfigError, "unknown scenario " + name);
  if (o.n % 2 == 0 && name != "happy") {
    throw Error(ErrorCode::kConfigError, "N must be odd for scenario " + name);
  }
  ScenarioOutcome out;
  out.name = name;
  std::ostringstream summary;
  std::string verdict;

  if (name == "sweep-n") {
    std::vector<double> ns, totals;
    bool all = true;
    for (uint32_t n : kSweepSizes) {
      SimConfig c = base_config(o, n);
      Simulator s(c, kOneRequest);
      ScenarioRun r = finish(s, c);
      bool exact = r.row.verify_msgs == uint64_t{n} * n;
      all = all && exact && r.trace.metrics.completed == 1 && r.check.ok();
      ns.push_back(n);
      totals.push_back(static_cast<double>(r.row.total_msgs));
      summary << describe(r) << (exact ? "" : " VERIFY != N^2") << '\n';
      out.runs.push_back(std::move(r));
    }
    Fit q = fit_quadratic(ns, totals);
    summary << "quadratic fit of total messages: R^2=" << q.r_squared << '\n';
    out.passed = all && crashed_count(out.runs[0].config) == 0 && q.r_squared > 0.999;
    out.summary = summary.str() + (out.passed ? "PASS" : "FAIL") + " sweep-n\n";
    return out;
  }

  SimConfig c = base_config(o, o.n);
  if (o.n % 2 == 0) c.allow_even_n = true;
  if (!o.crashes) {
    if (name == "crash-f") c.crash_schedule = choose_crashes(o.n, false, o.seed);
    if (name == "crash-f-plus-1") c.crash_schedule = choose_crashes(o.n, true, o.seed);
    if (name == "primary-crash-viewchange") c.crash_schedule = {{0, 0}};
  }
  Simulator s(c, kOneRequest);
  if (name == "equivocation") {
    // A second FORWARD on page (0, id) with a different tuple, sent as if by
    // the primary to every replica after the genuine one.
    const protocol::MessageId& id = s.request_ids()[0];
    Digest h{};
    h[31] = 1;
    protocol::Forward forged{id, h, s.group().encode(s.group().hash_to_group(h)), 0};
    uint64_t at = 2 * c.delay.max_ms + 1;
    for (uint32_t i = 1; i < c.n; ++i) {
      s.inject(at, node::Address::node(0), node::Address::node(i), forged);
    }
  }
  ScenarioRun r = finish(s, c);
  const sim::Metrics& m = r.trace.metrics;
  summary << describe(r) << '\n';
  bool ok = r.check.ok();
  if (name == "happy") {
    ok = ok && m.completed == 1;
    if (c.crash_schedule.empty()) {
      ok = ok && r.row.verify_msgs == uint64_t{c.n} * c.n &&
           m.sent_of(MessageKind::kForward) == c.n - 1;
    }
    verdict = "commit";
  } else if (name == "crash-f") {
    ok = ok && m.completed == 1;
    verdict = "commit with f crashed";
  } else if (name == "crash-f-plus-1") {
    ok = ok && m.completed == 0 && m.node_commits == 0;
    verdict = "stall-confirmed";
  } else if (name == "primary-crash-viewchange") {
    bool adopted = true;
    for (uint32_t i = 0; i < c.n; ++i) {
      if (s.crashed(i)) continue;
      adopted = adopted && s.node(i).view() >= 1 && s.node(i).ledger().height() >= 1;
    }
    protocol::View v = s.node(1 % c.n).view();
    summary << "view " << v << " primary " << s.node(1 % c.n).primary_of(v) << '\n';
    ok = ok && adopted && m.completed == 1;
    verdict = "view change and commit";
  } else if (name == "equivocation") {
    ok = ok && has_event(r.trace, "equivocation") && m.view_adoptions >= node::quorum_size(c.n) &&
         m.completed == 1;
    verdict = "equivocation detected, one tuple committed";
  }
  out.runs.push_back(std::move(r));
  out.passed = ok;
  out.summary = summary.str() + (ok ? "PASS " : "FAIL ") + name + ": " + verdict + "\n";
  return out;
}

}  // namespace pcft::app
