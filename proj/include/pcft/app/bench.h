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

// Wall-clock timing of key_gen, proof_gen and proof_verify. Consensus is not
// involved.

#ifndef PCFT_APP_BENCH_H_
#define PCFT_APP_BENCH_H_

#include <string>
#include <vector>

#include "pcft/app/stats.h"
#include "pcft/crypto/bilinear_group.h"

namespace pcft::app {

struct BenchResult {
  std::string operation;  // keygen, prove or verify
  std::string backend;
  size_t iterations;
  double mean_ms;
  double p50_ms;
  double p95_ms;
};

// Total time to prove and to verify T independent messages.
struct BenchTotal {
  size_t tx_count;
  double prove_ms;
  double verify_ms;
};

struct BenchReport {
  std::vector<BenchResult> results;
  std::vector<BenchTotal> totals;
  Fit prove_fit;   // totals vs T, through the origin
  Fit verify_fit;
  bool all_verified = true;

  const BenchResult& result(const std::string& op) const;
  // mean verify > mean prove
  bool ordering_holds() const;
};

inline constexpr size_t kMinIterations = 30;

// Per-operation results pool every sample; keygen runs max(30, keygen_iterations)
// times. Throws Error(kConfigError) for an empty or zero tx count. Messages
// and keys are derived from `seed`.
BenchReport run_bench(const crypto::BilinearGroup& group, const std::vector<size_t>& tx_counts,
                      uint64_t seed, size_t keygen_iterations = kMinIterations);

std::string bench_csv_header();           // operation,backend,iterations,mean_ms,p50_ms,p95_ms
std::string bench_csv_line(const BenchResult& r);
std::string bench_totals_csv_header();    // tx_count,prove_total_ms,verify_total_ms
std::string bench_totals_csv_line(const BenchTotal& t);

}  // namespace pcft::app

#endif  // PCFT_APP_BENCH_H_
