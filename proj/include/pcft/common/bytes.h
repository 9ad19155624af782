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

#ifndef PCFT_COMMON_BYTES_H_
#define PCFT_COMMON_BYTES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcft {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

// 32-byte SHA-256 output.
using Digest = std::array<uint8_t, 32>;

std::string to_hex(ByteSpan bytes);

// Throws Error(kParseError) on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline ByteSpan as_span(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

void append_u32_be(Bytes& out, uint32_t v);
void append_u64_be(Bytes& out, uint64_t v);
void append(Bytes& out, ByteSpan bytes);

uint32_t load_u32_be(const uint8_t* p);
uint64_t load_u64_be(const uint8_t* p);

}  // namespace pcft

#endif  // PCFT_COMMON_BYTES_H_
