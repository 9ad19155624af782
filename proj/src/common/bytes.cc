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

#include "pcft/common/bytes.h"

#include "pcft/common/error.h"

namespace pcft {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyMessage: return "EmptyMessage";
    case ErrorCode::kDecodeError: return "DecodeError";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kInvalidScalar: return "InvalidScalar";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptyBatch: return "EmptyBatch";
    case ErrorCode::kDuplicateSetup: return "DuplicateSetup";
    case ErrorCode::kNoKey: return "NoKey";
    case ErrorCode::kDuplicateRequest: return "DuplicateRequest";
    case ErrorCode::kNotPrimary: return "NotPrimary";
    case ErrorCode::kEquivocationAttempt: return "EquivocationAttempt";
    case ErrorCode::kStaleView: return "StaleView";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
  }
  return "Unknown";
}

std::string to_hex(ByteSpan bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kParseError, "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kParseError, "invalid hex character");
    }
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

void append_u32_be(Bytes& out, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(v >> shift));
  }
}

void append_u64_be(Bytes& out, uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(v >> shift));
  }
}

void append(Bytes& out, ByteSpan bytes) {
  out.insert(out.end(), bytes.begin(), bytes.end());
}

uint32_t load_u32_be(const uint8_t* p) {
  return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) |
         (uint32_t{p[2]} << 8) | uint32_t{p[3]};
}

uint64_t load_u64_be(const uint8_t* p) {
  return (uint64_t{load_u32_be(p)} << 32) | load_u32_be(p + 4);
}

}  // namespace pcft
