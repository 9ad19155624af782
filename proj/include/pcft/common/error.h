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

#ifndef PCFT_COMMON_ERROR_H_
#define PCFT_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcft {

enum class ErrorCode {
  kEmptyMessage,
  kDecodeError,
  kGroupMismatch,
  kInvalidScalar,
  kDuplicateId,
  kEmptyBatch,
  kDuplicateSetup,
  kNoKey,
  kDuplicateRequest,
  kNotPrimary,
  kEquivocationAttempt,
  kStaleView,
  kUnknownId,
  kConfigError,
  kParseError,
  kBackendUnavailable,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed wire bytes. `offset` is the byte position where parsing failed.
class DecodeError : public Error {
 public:
  DecodeError(size_t offset, const std::string& what)
      : Error(ErrorCode::kDecodeError,
              what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

}  // namespace pcft

#endif  // PCFT_COMMON_ERROR_H_
