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

#include "pcft/app/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "pcft/app/bench.h"
#include "pcft/app/scenario.h"
#include "pcft/common/error.h"
#include "pcft/sim/trace_checker.h"

namespace pcft::app {

namespace fs = std::filesystem;

namespace {

std::optional<uint64_t> parse_u64(std::string_view s) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

sim::CrashSpec parse_crash(const std::string& s) {
  size_t colon = s.find(':');
  std::optional<uint64_t> t, idx;
  if (colon != std::string::npos) {
    t = parse_u64(std::string_view(s).substr(0, colon));
    idx = parse_u64(std::string_view(s).substr(colon + 1));
  }
  if (!t || !idx || *idx > UINT32_MAX) {
    throw Error(ErrorCode::kConfigError, "--crash expects <time_ms>:<node>, got '" + s + "'");
  }
  return {*t, static_cast<uint32_t>(*idx)};
}

crypto::BackendId parse_backend(const std::string& s) {
  return s == "toy" ? crypto::BackendId::kToyExponent : crypto::BackendId::kProductionCurve;
}

uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PCFT_SEED")) {
    std::optional<uint64_t> v = parse_u64(env);
    if (!v) throw Error(ErrorCode::kConfigError, std::string("PCFT_SEED is not an integer: ") + env);
    return *v;
  }
  return 1;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kConfigError, "cannot write " + path.string());
  f << contents;
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(ErrorCode::kConfigError, "cannot create " + dir + ": " + ec.message());
  return p;
}

int cmd_scenario(const std::string& name, const ScenarioOptions& opts, const std::string& out_dir,
                 std::ostream& out) {
  ScenarioOutcome o = run_scenario(name, opts);
  fs::path dir = prepare_out(out_dir);
  std::string csv = sim::metrics_csv_header() + "\n";
  for (const ScenarioRun& r : o.runs) {
    csv += sim::metrics_csv_line(r.row) + "\n";
    std::string file = o.runs.size() == 1 ? "trace.ndjson"
                                          : "trace_n" + std::to_string(r.config.n) + ".ndjson";
    write_file(dir / file, r.trace.ndjson());
  }
  write_file(dir / "metrics.csv", csv);
  out << o.summary;
  for (const ScenarioRun& r : o.runs) {
    if (!r.check.ok()) out << r.check.to_text();
  }
  return o.passed ? kExitOk : kExitViolated;
}

int cmd_bench(crypto::BackendId backend, const std::vector<size_t>& tx, uint64_t seed,
              const std::string& out_dir, std::ostream& out) {
  crypto::BilinearGroup g = backend == crypto::BackendId::kToyExponent
                                ? crypto::BilinearGroup::toy_exponent()
                                : crypto::BilinearGroup::production_curve();
  BenchReport rep = run_bench(g, tx, seed);
  fs::path dir = prepare_out(out_dir);
  std::string csv = bench_csv_header() + "\n";
  for (const BenchResult& r : rep.results) csv += bench_csv_line(r) + "\n";
  std::string totals = bench_totals_csv_header() + "\n";
  for (const BenchTotal& t : rep.totals) totals += bench_totals_csv_line(t) + "\n";
  write_file(dir / "bench.csv", csv);
  write_file(dir / "bench_totals.csv", totals);
  out << csv << totals;
  out << "linear fit R^2: prove=" << rep.prove_fit.r_squared
      << " verify=" << rep.verify_fit.r_squared << "\n";

  bool ok = rep.all_verified;
  if (!rep.all_verified) out << "FAIL some proofs did not verify\n";
  if (backend == crypto::BackendId::kProductionCurve) {
    bool ordered = rep.ordering_holds();
    out << (ordered ? "PASS" : "FAIL") << " mean verify > mean prove\n";
    ok = ok && ordered;
  }
  return ok ? kExitOk : kExitViolated;
}

int cmd_check_trace(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "cannot read " << path << "\n";
    return kExitUsage;
  }
  try {
    sim::CheckReport rep = sim::check_trace(f);
    out << rep.to_text();
    return rep.ok() ? kExitOk : kExitViolated;
  } catch (const sim::TraceParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitViolated;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Privacy-preserving crash-fault-tolerant consensus simulator"};
  app.require_subcommand(1);

  std::string name, out_dir = ".", backend = "curve", trace_path;
  std::optional<uint64_t> seed;
  uint32_t n = 5;
  uint64_t horizon = 5000;
  std::vector<std::string> crashes;
  std::vector<size_t> tx{10, 100, 1000};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (falls back to PCFT_SEED, then 1)");
    sub->add_option("--backend", backend, "Group backend")->check(CLI::IsMember({"curve", "toy"}));
    sub->add_option("--out", out_dir, "Output directory");
  };

  CLI::App* scenario = app.add_subcommand("scenario", "Run a named scenario");
  scenario->add_option("name", name, "Scenario name")->required();
  scenario->add_option("--n", n, "Number of consensus nodes");
  scenario->add_option("--horizon-ms", horizon, "Simulated time limit");
  scenario->add_option("--crash", crashes, "Crash <time_ms>:<node>, repeatable");
  add_common(scenario);

  CLI::App* bench = app.add_subcommand("bench", "Time key generation, proving and verifying");
  bench->add_option("--tx", tx, "Transaction counts")->delimiter(',');
  add_common(bench);

  CLI::App* check = app.add_subcommand("check-trace", "Re-check a trace file");
  check->add_option("file", trace_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*scenario) {
      if (!is_scenario(name)) {
        err << "unknown scenario '" << name << "'; expected one of:";
        for (const char* s : kScenarioNames) err << ' ' << s;
        err << "\n";
        return kExitUsage;
      }
      ScenarioOptions o;
      o.n = n;
      o.seed = resolve_seed(seed);
      o.backend = parse_backend(backend);
      o.horizon_ms = horizon;
      if (!crashes.empty()) {
        o.crashes.emplace();
        for (const std::string& c : crashes) o.crashes->push_back(parse_crash(c));
      }
      return cmd_scenario(name, o, out_dir, out);
    }
    if (*bench) return cmd_bench(parse_backend(backend), tx, resolve_seed(seed), out_dir, out);
    return cmd_check_trace(trace_path, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pcft::app
