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

// Hashing to G1 with the BLS12381G1_XMD:SHA-256_SSWU_RO_ suite of RFC 9380.

#ifndef PCFT_CRYPTO_BLS12_381_HASH_TO_CURVE_H_
#define PCFT_CRYPTO_BLS12_381_HASH_TO_CURVE_H_

#include <array>
#include <cstddef>

#include "pcft/common/bytes.h"
#include "pcft/crypto/bls12_381/curve.h"

namespace pcft::crypto::bls12_381 {

// Domain separation tag used by the protocol for h = H(digest).
inline constexpr std::string_view kProtocolDst =
    "PCFT-V01-CS01-with-BLS12381G1_XMD:SHA-256_SSWU_RO_";

// expand_message_xmd with SHA-256. `dst` must be at most 255 bytes and
// `len` at most 255 * 32.
Bytes expand_message_xmd(ByteSpan msg, ByteSpan dst, size_t len);

std::array<Fp, 2> hash_to_field(ByteSpan msg, ByteSpan dst);

// Simplified SWU onto the 11-isogenous curve E': y^2 = x^3 + A'x + B'.
G1Affine map_to_isogenous_curve(const Fp& u);

// The 11-isogeny E' -> E.
G1Affine iso_map(const G1Affine& p);

// Multiplication by h_eff = 1 - x.
G1 clear_cofactor(const G1& p);

G1 hash_to_g1(ByteSpan msg, ByteSpan dst);

}  // namespace pcft::crypto::bls12_381

#endif  // PCFT_CRYPTO_BLS12_381_HASH_TO_CURVE_H_
