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

// Re-checks a trace from its raw records only: no node state is consulted.
//
//   agreement        every committed height carries one block hash
//   validity         every committed delta verifies under the distributed pk
//   quorum-safety    each commit at node X is preceded by VERIFY(r = true)
//                    tuples matching the entry, delivered to X from at least
//                    floor(N/2) + 1 distinct nodes
//   chain-integrity  each node's commits form a valid hash-linked chain
//   no-equivocation  one (h, delta) per id chain-wide
//   crash-stop       a crashed node neither sends nor processes afterwards

#ifndef PCFT_SIM_TRACE_CHECKER_H_
#define PCFT_SIM_TRACE_CHECKER_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "pcft/common/error.h"

namespace pcft::sim {

class TraceParseError : public Error {
 public:
  TraceParseError(size_t line, const std::string& what)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<size_t> line;  // 1-based, first offending record
};

struct CheckReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  size_t records = 0;
  size_t commits = 0;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  // One "PASS name" / "FAIL name line N: detail" line per check, then
  // warnings.
  std::string to_text() const;
};

// Throws TraceParseError for malformed records.
CheckReport check_trace(std::istream& in);
CheckReport check_trace_lines(const std::vector<std::string>& lines);

}  // namespace pcft::sim

#endif  // PCFT_SIM_TRACE_CHECKER_H_
