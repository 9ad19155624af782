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

#include "pcft/app/bench.h"

#include <chrono>
#include <cstdio>

#include "pcft/common/error.h"
#include "pcft/crypto/proof.h"
#include "pcft/crypto/sha256.h"

namespace pcft::app {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::array<uint8_t, 32> derive(uint64_t seed, const char* label, uint64_t k) {
  Bytes b = to_bytes(label);
  append_u64_be(b, seed);
  append_u64_be(b, k);
  return crypto::sha256(b);
}

BenchResult make_result(const char* op, const crypto::BilinearGroup& g,
                        const std::vector<double>& samples) {
  Summary s = summarize(samples);
  return BenchResult{op, crypto::backend_name(g.backend_id()), samples.size(),
                     s.mean, s.p50, s.p95};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

const BenchResult& BenchReport::result(const std::string& op) const {
  for (const BenchResult& r : results) {
    if (r.operation == op) return r;
  }
  throw Error(ErrorCode::kConfigError, "no bench result for " + op);
}

bool BenchReport::ordering_holds() const {
  return result("verify").mean_ms > result("prove").mean_ms;
}

BenchReport run_bench(const crypto::BilinearGroup& group, const std::vector<size_t>& tx_counts,
                      uint64_t seed, size_t keygen_iterations) {
  if (tx_counts.empty()) throw Error(ErrorCode::kConfigError, "no transaction counts");
  for (size_t t : tx_counts) {
    if (t == 0) throw Error(ErrorCode::kConfigError, "transaction count must be positive");
  }
  BenchReport report;
  std::vector<double> keygen, prove, verify;
  std::vector<crypto::KeyPair> keys;
  for (size_t k = 0; k < std::max(keygen_iterations, kMinIterations); ++k) {
    auto t0 = Clock::now();
    crypto::KeyPair kp = crypto::key_gen(group, derive(seed, "bench/key", k));
    keygen.push_back(ms_since(t0));
    keys.push_back(std::move(kp));
  }

  uint64_t msg_counter = 0;
  for (size_t t : tx_counts) {
    std::vector<Bytes> messages;
    for (size_t k = 0; k < t; ++k) {
      Bytes m = to_bytes("tx ");
      append(m, derive(seed, "bench/msg", msg_counter++));
      messages.push_back(std::move(m));
    }
    std::vector<crypto::Proof> proofs;
    double prove_total = 0, verify_total = 0;
    for (size_t k = 0; k < t; ++k) {
      const crypto::KeyPair& kp = keys[k % keys.size()];
      auto t0 = Clock::now();
      proofs.push_back(crypto::proof_gen(messages[k], kp.sk, group));
      double ms = ms_since(t0);
      prove.push_back(ms);
      prove_total += ms;
    }
    for (size_t k = 0; k < t; ++k) {
      const crypto::KeyPair& kp = keys[k % keys.size()];
      auto t0 = Clock::now();
      bool ok = crypto::proof_verify(proofs[k], kp.pk, group);
      double ms = ms_since(t0);
      verify.push_back(ms);
      verify_total += ms;
      report.all_verified = report.all_verified && ok;
    }
    report.totals.push_back({t, prove_total, verify_total});
  }
  report.results = {make_result("keygen", group, keygen), make_result("prove", group, prove),
                    make_result("verify", group, verify)};
  std::vector<double> x, yp, yv;
  for (const BenchTotal& b : report.totals) {
    x.push_back(static_cast<double>(b.tx_count));
    yp.push_back(b.prove_ms);
    yv.push_back(b.verify_ms);
  }
  report.prove_fit = fit_through_origin(x, yp);
  report.verify_fit = fit_through_origin(x, yv);
  return report;
}

std::string bench_csv_header() { return "operation,backend,iterations,mean_ms,p50_ms,p95_ms"; }

std::string bench_csv_line(const BenchResult& r) {
  return r.operation + "," + r.backend + "," + std::to_string(r.iterations) + "," +
         fmt(r.mean_ms) + "," + fmt(r.p50_ms) + "," + fmt(r.p95_ms);
}

std::string bench_totals_csv_header() { return "tx_count,prove_total_ms,verify_total_ms"; }

std::string bench_totals_csv_line(const BenchTotal& t) {
  return std::to_string(t.tx_count) + "," + fmt(t.prove_ms) + "," + fmt(t.verify_ms);
}

}  // namespace pcft::app
