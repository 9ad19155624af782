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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits non-zero
// if any fails. Optional arguments select criteria by number.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pcft/app/bench.h"
#include "pcft/app/scenario.h"
#include "pcft/crypto/proof.h"
#include "pcft/crypto/sha256.h"
#include "pcft/sim/trace_checker.h"

namespace {

using namespace pcft;
using app::ScenarioOptions;
using app::ScenarioOutcome;
using crypto::BilinearGroup;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Every trace from criteria 3-5, re-checked from its serialized form in 7.
std::vector<std::string> g_traces;

ScenarioOutcome run(const std::string& name, uint32_t n, uint64_t seed) {
  ScenarioOptions o;
  o.n = n;
  o.seed = seed;
  o.backend = crypto::BackendId::kProductionCurve;
  return app::run_scenario(name, o);
}

// 1000 random round trips plus one tampered field for each, on one backend.
Verdict round_trips(const BilinearGroup& g, double limit_s, std::string& detail) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  int accepted = 0, rejected = 0, exceptions = 0, redrawn = 0;
  std::optional<crypto::KeyPair> previous;
  for (int i = 0; i < 1000; ++i) {
    try {
      Digest seed;
      for (uint8_t& b : seed) b = static_cast<uint8_t>(rng());
      crypto::KeyPair kp = crypto::key_gen(g, seed);
      Bytes m(1 + rng() % 64);
      for (uint8_t& b : m) b = static_cast<uint8_t>(rng());
      crypto::Proof p = crypto::proof_gen(m, kp.sk, g);
      if (crypto::proof_verify(p, kp.pk, g)) ++accepted;

      crypto::Proof bad = p;
      crypto::GroupElement pk = kp.pk;
      // A change that leaves delta, H(h) and pk all equal as group elements
      // is not a tampering; the toy group has only p - 1 hash outputs, so
      // such collisions do occur there. Redraw them.
      for (;;) {
        bad = p;
        pk = kp.pk;
        switch (i % 3) {
          case 0:  // delta
            bad.delta = g.mul(p.delta, g.generator());
            break;
          case 1:  // digest, one bit
            bad.digest[rng() % 32] ^= static_cast<uint8_t>(1u << (rng() % 8));
            break;
          case 2:  // key of another pair
            pk = previous ? g.mul(previous->pk, g.pow(g.generator(), g.scalar_from_u64(rng() % 8)))
                          : g.mul(kp.pk, g.generator());
            break;
        }
        bool same = bad.delta == p.delta && pk == kp.pk &&
                    g.hash_to_group(bad.digest) == g.hash_to_group(p.digest);
        if (!same) break;
        ++redrawn;
      }
      if (!crypto::proof_verify(bad, pk, g)) ++rejected;
      previous = std::move(kp);
    } catch (const std::exception&) {
      ++exceptions;
    }
  }
  double s = seconds_since(t0);
  detail = std::string(crypto::backend_name(g.backend_id())) + ": " + std::to_string(accepted) +
           "/1000 verify, " + std::to_string(rejected) + "/1000 tampered rejected (" +
           std::to_string(redrawn) + " no-op tamperings redrawn), " +
           std::to_string(exceptions) + " exceptions, " + fmt("%.2f s", s) + " (limit " +
           fmt("%.0f s", limit_s) + ")";
  return {accepted == 1000 && rejected == 1000 && exceptions == 0 && s < limit_s, detail};
}

Verdict criterion1() {
  std::string a, b;
  Verdict curve = round_trips(BilinearGroup::production_curve(), 60, a);
  Verdict toy = round_trips(BilinearGroup::toy_exponent(), 1, b);
  return {curve.pass && toy.pass, a + "; " + b};
}

// Exhaustive comparison against integer arithmetic in the exponent.
Verdict criterion2() {
  auto t0 = Clock::now();
  constexpr uint64_t p = 1009;
  BilinearGroup g = BilinearGroup::toy_exponent(p);
  auto oracle = [](uint64_t delta_exp, uint64_t h_exp, uint64_t sk) {
    return delta_exp != 0 && delta_exp == h_exp * sk % p;
  };
  uint64_t checks = 0, agree = 0, gen_ok = 0;
  for (uint64_t sk = 1; sk < p; ++sk) {
    crypto::KeyPair kp = crypto::key_from_scalar(g, g.scalar_from_u64(sk), {});
    for (uint64_t h = 1; h < p; ++h) {
      // The toy hash maps digest d to exponent (d mod (p - 1)) + 1.
      Digest d{};
      d[30] = static_cast<uint8_t>((h - 1) >> 8);
      d[31] = static_cast<uint8_t>(h - 1);
      crypto::Proof genuine = crypto::proof_gen_from_digest(d, kp.sk, g);
      uint64_t delta = genuine.delta.toy_exponent();
      if (delta == h * sk % p) ++gen_ok;
      uint64_t wrong = (delta + 1 + (sk * 31 + h) % (p - 1)) % p;
      crypto::Proof forged{g.pow(g.generator(), g.scalar_from_u64(wrong)), d};
      for (const crypto::Proof* pr : {&genuine, &forged}) {
        ++checks;
        bool got = crypto::proof_verify(*pr, kp.pk, g);
        if (got == oracle(pr->delta.toy_exponent(), h, sk)) ++agree;
      }
    }
  }
  double s = seconds_since(t0);
  uint64_t pairs = (p - 1) * (p - 1);
  return {agree == checks && gen_ok == pairs && s < 30,
          std::to_string(agree) + "/" + std::to_string(checks) + " verdicts agree, " +
              std::to_string(gen_ok) + "/" + std::to_string(pairs) + " proofs match oracle, " +
              fmt("%.2f s", s)};
}

Verdict criterion3() {
  auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream d;
  for (uint32_t n : {3u, 5u, 7u}) {
    int f_ok = 0, f1_commits = 0, with_primary = 0;
    for (uint64_t seed = 1; seed <= 100; ++seed) {
      ScenarioOutcome a = run("crash-f", n, seed);
      const app::ScenarioRun& ra = a.runs[0];
      if (ra.trace.metrics.completed == 1) ++f_ok;
      for (const sim::CrashSpec& c : ra.config.crash_schedule) {
        if (c.node == 0) ++with_primary;
      }
      ScenarioOutcome b = run("crash-f-plus-1", n, seed);
      const app::ScenarioRun& rb = b.runs[0];
      if (rb.trace.metrics.completed != 0 || rb.trace.metrics.node_commits != 0) ++f1_commits;
      g_traces.push_back(ra.trace.ndjson());
      g_traces.push_back(rb.trace.ndjson());
    }
    pass = pass && f_ok == 100 && f1_commits == 0;
    d << "N=" << n << " f: " << f_ok << "/100 commit (primary crashed in " << with_primary
      << "), f+1: " << f1_commits << "/100 commit; ";
  }
  double s = seconds_since(t0);
  d << fmt("%.1f s", s);
  return {pass && s < 120, d.str()};
}

Verdict criterion4() {
  ScenarioOptions o;
  o.backend = crypto::BackendId::kProductionCurve;
  ScenarioOutcome out = app::run_scenario("sweep-n", o);
  std::vector<double> ns, totals;
  bool exact = true;
  std::ostringstream d;
  for (const app::ScenarioRun& r : out.runs) {
    uint64_t n = r.config.n;
    exact = exact && r.row.verify_msgs == n * n && r.row.commits == 1;
    d << "N=" << n << " VERIFY=" << r.row.verify_msgs << " total=" << r.row.total_msgs << "; ";
    ns.push_back(static_cast<double>(n));
    totals.push_back(static_cast<double>(r.row.total_msgs));
    g_traces.push_back(r.trace.ndjson());
  }
  app::Fit q = app::fit_quadratic(ns, totals);
  d << "quadratic R^2=" << fmt("%.6f", q.r_squared);
  return {exact && out.runs.size() == 5 && q.r_squared > 0.999, d.str()};
}

Verdict criterion5() {
  constexpr uint32_t n = 5;
  int good = 0;
  std::string first_failure;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    ScenarioOutcome out = run("primary-crash-viewchange", n, seed);
    const app::ScenarioRun& r = out.runs[0];
    g_traces.push_back(r.trace.ndjson());
    std::map<std::string, uint64_t> first_adopted;
    std::set<std::string> committed;
    for (const std::string& line : r.trace.lines) {
      nlohmann::json j = nlohmann::json::parse(line);
      if (j.value("type", "") != "event") continue;
      std::string at = j.value("at", "");
      std::string ev = j.value("event", "");
      if (ev == "view_adopted" && !first_adopted.count(at)) first_adopted[at] = j.value("v", 0ull);
      if (ev == "commit") committed.insert(at);
    }
    bool ok = r.trace.metrics.completed == 1;
    // The crashed primary of view 0 is node 0; the new primary is (0 + 1) mod N.
    for (uint32_t i = 1; i < n; ++i) {
      std::string at = "node:" + std::to_string(i);
      ok = ok && first_adopted.count(at) && first_adopted[at] == 1 && committed.count(at);
    }
    ok = ok && !first_adopted.count("node:0") && (0 + 1) % n == 1 &&
         out.summary.find("view 1 primary 1") != std::string::npos;
    if (ok) {
      ++good;
    } else if (first_failure.empty()) {
      first_failure = " first failure seed " + std::to_string(seed);
    }
  }
  return {good == 100, std::to_string(good) +
                           "/100 runs: nodes 1-4 adopt view 1 with primary 1 and commit" +
                           first_failure};
}

Verdict criterion6() {
  app::BenchReport r = app::run_bench(BilinearGroup::production_curve(), {10, 100, 1000}, 1);
  const app::BenchResult& prove = r.result("prove");
  const app::BenchResult& verify = r.result("verify");
  bool a = verify.mean_ms > prove.mean_ms;
  bool b = r.prove_fit.r_squared > 0.99 && r.verify_fit.r_squared > 0.99;
  bool c = prove.mean_ms >= 1 && prove.mean_ms <= 500;
  std::ostringstream d;
  d << "(a) verify " << fmt("%.3f", verify.mean_ms) << " ms > prove " << fmt("%.3f", prove.mean_ms)
    << " ms: " << (a ? "yes" : "no") << "; (b) R^2 prove=" << fmt("%.5f", r.prove_fit.r_squared)
    << " verify=" << fmt("%.5f", r.verify_fit.r_squared) << "; (c) prove mean in [1, 500] ms: "
    << (c ? "yes" : "no") << "; keygen mean " << fmt("%.3f", r.result("keygen").mean_ms)
    << " ms; all proofs verified: " << (r.all_verified ? "yes" : "no");
  return {a && b && c && r.all_verified, d.str()};
}

Verdict criterion7() {
  static const char* kRequired[] = {"agreement", "validity", "quorum-safety", "chain-integrity"};
  size_t passed = 0;
  std::string first_failure;
  for (size_t i = 0; i < g_traces.size(); ++i) {
    std::istringstream in(g_traces[i]);
    bool ok = true;
    try {
      sim::CheckReport rep = sim::check_trace(in);
      for (const char* name : kRequired) {
        const sim::CheckResult* c = rep.find(name);
        ok = ok && c && c->pass;
      }
      ok = ok && rep.ok();
      if (!ok && first_failure.empty()) first_failure = rep.to_text();
    } catch (const std::exception& e) {
      ok = false;
      if (first_failure.empty()) first_failure = e.what();
    }
    if (ok) ++passed;
  }
  bool pass = passed == g_traces.size() && !g_traces.empty();
  return {pass, std::to_string(passed) + "/" + std::to_string(g_traces.size()) +
                    " traces pass agreement, validity, quorum-safety, chain-integrity" +
                    (first_failure.empty() ? "" : "; " + first_failure)};
}

Verdict criterion8() {
  int identical = 0, total = 0;
  std::ostringstream d;
  for (const char* name : {"happy", "crash-f", "primary-crash-viewchange"}) {
    ScenarioOutcome ref = run(name, 5, 7);
    std::string trace = ref.runs[0].trace.ndjson();
    std::string csv = sim::metrics_csv_line(ref.runs[0].row);
    int same = 0;
    for (int k = 0; k < 10; ++k) {
      ScenarioOutcome again = run(name, 5, 7);
      if (again.runs[0].trace.ndjson() == trace && sim::metrics_csv_line(again.runs[0].row) == csv) {
        ++same;
      }
    }
    identical += same;
    total += 10;
    d << name << " " << same << "/10 (" << to_hex(crypto::sha256(as_span(trace))).substr(0, 16)
      << "); ";
  }
  return {identical == total, d.str()};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "correctness", criterion1},      {2, "toy oracle equivalence", criterion2},
      {3, "crash tolerance", criterion3},  {4, "message complexity", criterion4},
      {5, "view change", criterion5},      {6, "benchmark shape", criterion6},
      {7, "trace safety invariants", criterion7}, {8, "determinism", criterion8},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  // 7 checks the traces of 3-5.
  if (selected.count(7)) selected.insert({3, 4, 5});

  int failures = 0;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s %d %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", c.number, c.name,
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
