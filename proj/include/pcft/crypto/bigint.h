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

#ifndef PCFT_CRYPTO_BIGINT_H_
#define PCFT_CRYPTO_BIGINT_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

#include "pcft/common/bytes.h"

namespace pcft::crypto {

using u128 = unsigned __int128;

// Fixed-width unsigned integer, 64-bit limbs, least significant limb first.
template <size_t N>
struct BigInt {
  static constexpr size_t kLimbs = N;
  static constexpr size_t kBytes = 8 * N;

  std::array<uint64_t, N> limbs{};

  static constexpr BigInt from_u64(uint64_t v) {
    BigInt r;
    r.limbs[0] = v;
    return r;
  }

  // Accepts an optional "0x" prefix. Throws std::invalid_argument (a compile
  // error in constant evaluation) if the value does not fit.
  static constexpr BigInt from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    BigInt r;
    size_t bit = 0;
    for (size_t i = hex.size(); i-- > 0;) {
      char c = hex[i];
      uint64_t d = 0;
      if (c >= '0' && c <= '9') {
        d = static_cast<uint64_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        d = static_cast<uint64_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        d = static_cast<uint64_t>(c - 'A' + 10);
      } else {
        throw std::invalid_argument("bad hex digit");
      }
      if (bit >= 64 * N) {
        if (d != 0) throw std::invalid_argument("hex value too large");
        continue;
      }
      r.limbs[bit / 64] |= d << (bit % 64);
      bit += 4;
    }
    return r;
  }

  // Big-endian bytes; `bytes.size()` must be at most 8N.
  static BigInt from_be_bytes(ByteSpan bytes) {
    if (bytes.size() > kBytes) throw std::invalid_argument("too many bytes");
    BigInt r;
    size_t shift = 0;
    for (size_t i = bytes.size(); i-- > 0;) {
      r.limbs[shift / 64] |= uint64_t{bytes[i]} << (shift % 64);
      shift += 8;
    }
    return r;
  }

  // Writes the low `out.size()` bytes big-endian. Higher bytes must be zero.
  void to_be_bytes(std::span<uint8_t> out) const {
    for (size_t i = 0; i < out.size(); ++i) {
      size_t shift = 8 * i;
      out[out.size() - 1 - i] =
          shift < 64 * N ? static_cast<uint8_t>(limbs[shift / 64] >> (shift % 64))
                         : 0;
    }
  }

  constexpr bool is_zero() const {
    for (uint64_t l : limbs) {
      if (l != 0) return false;
    }
    return true;
  }

  constexpr bool is_odd() const { return (limbs[0] & 1) != 0; }

  constexpr bool bit(size_t i) const {
    return i < 64 * N && ((limbs[i / 64] >> (i % 64)) & 1) != 0;
  }

  constexpr size_t bit_length() const {
    for (size_t i = N; i-- > 0;) {
      if (limbs[i] != 0) {
        size_t b = 64;
        while (((limbs[i] >> (b - 1)) & 1) == 0) --b;
        return 64 * i + b;
      }
    }
    return 0;
  }

  friend constexpr std::strong_ordering operator<=>(const BigInt& a,
                                                    const BigInt& b) {
    for (size_t i = N; i-- > 0;) {
      if (a.limbs[i] != b.limbs[i]) return a.limbs[i] <=> b.limbs[i];
    }
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const BigInt&, const BigInt&) = default;
};

// a += b, returns the carry out.
template <size_t N>
constexpr uint64_t add_in_place(BigInt<N>& a, const BigInt<N>& b) {
  uint64_t carry = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 t = u128{a.limbs[i]} + b.limbs[i] + carry;
    a.limbs[i] = static_cast<uint64_t>(t);
    carry = static_cast<uint64_t>(t >> 64);
  }
  return carry;
}

// a -= b, returns the borrow out.
template <size_t N>
constexpr uint64_t sub_in_place(BigInt<N>& a, const BigInt<N>& b) {
  uint64_t borrow = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 t = u128{a.limbs[i]} - b.limbs[i] - borrow;
    a.limbs[i] = static_cast<uint64_t>(t);
    borrow = static_cast<uint64_t>(t >> 64) & 1;
  }
  return borrow;
}

// a <<= 1, returns the bit shifted out.
template <size_t N>
constexpr uint64_t shl1_in_place(BigInt<N>& a) {
  uint64_t out = 0;
  for (size_t i = 0; i < N; ++i) {
    uint64_t next = a.limbs[i] >> 63;
    a.limbs[i] = (a.limbs[i] << 1) | out;
    out = next;
  }
  return out;
}

template <size_t N>
constexpr void shr1_in_place(BigInt<N>& a) {
  for (size_t i = 0; i < N; ++i) {
    a.limbs[i] >>= 1;
    if (i + 1 < N) a.limbs[i] |= a.limbs[i + 1] << 63;
  }
}

template <size_t N>
constexpr BigInt<N> add_small(BigInt<N> a, uint64_t v) {
  add_in_place(a, BigInt<N>::from_u64(v));
  return a;
}

template <size_t N>
constexpr BigInt<N> sub_small(BigInt<N> a, uint64_t v) {
  sub_in_place(a, BigInt<N>::from_u64(v));
  return a;
}

template <size_t N>
constexpr BigInt<N> shr(BigInt<N> a, size_t bits) {
  for (size_t i = 0; i < bits; ++i) shr1_in_place(a);
  return a;
}

// (2 * a) mod m for a < m.
template <size_t N>
constexpr BigInt<N> double_mod(BigInt<N> a, const BigInt<N>& m) {
  uint64_t carry = shl1_in_place(a);
  if (carry != 0 || a >= m) sub_in_place(a, m);
  return a;
}

// Interprets `bytes` as a big-endian integer of any length and reduces it
// modulo `m` (bit-serial long division).
template <size_t N>
BigInt<N> reduce_be_bytes(ByteSpan bytes, const BigInt<N>& m) {
  BigInt<N> acc;
  for (uint8_t byte : bytes) {
    for (int b = 7; b >= 0; --b) {
      uint64_t carry = shl1_in_place(acc);
      acc.limbs[0] |= (byte >> b) & 1;
      if (carry != 0 || acc >= m) sub_in_place(acc, m);
    }
  }
  return acc;
}

}  // namespace pcft::crypto

#endif  // PCFT_CRYPTO_BIGINT_H_
