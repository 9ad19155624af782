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

// Key generation, proof generation and proof verification:
//   sk <- Z_p, pk = g^sk
//   h = H(m), delta = h^sk
//   accept iff e(delta, g) == e(h, pk)

#ifndef PCFT_CRYPTO_PROOF_H_
#define PCFT_CRYPTO_PROOF_H_

#include <array>

#include "pcft/common/bytes.h"
#include "pcft/crypto/bilinear_group.h"

namespace pcft::crypto {

struct KeyPair {
  Scalar sk;
  GroupElement pk;
  // Binds the pair to a client identifier; opaque to this layer.
  Bytes key_id;
};

// delta and the 32-byte digest of the message. The message itself is never
// part of a proof.
struct Proof {
  GroupElement delta;
  Digest digest;

  friend bool operator==(const Proof&, const Proof&) = default;
};

inline constexpr uint8_t kProofTag = 0x50;

// sk is derived from the seed by counter-mode expansion:
//   wide_c = SHA256("pcft/keygen" || seed || BE32(c) || 0x00)
//         || SHA256("pcft/keygen" || seed || BE32(c) || 0x01)
//   sk = wide_c mod order, for the first c = 0, 1, ... giving sk != 0.
KeyPair key_gen(const BilinearGroup& group,
                const std::array<uint8_t, 32>& rng_seed, ByteSpan key_id = {});

// pk = g^sk for a caller-chosen sk. Throws Error(kInvalidScalar) unless
// sk is in [1, order).
KeyPair key_from_scalar(const BilinearGroup& group, const Scalar& sk,
                        ByteSpan key_id = {});

// Throws Error(kEmptyMessage) for an empty message and
// Error(kInvalidScalar) for sk outside [1, order).
Proof proof_gen(ByteSpan message, const Scalar& sk, const BilinearGroup& group);

// Same as proof_gen with the digest already computed.
Proof proof_gen_from_digest(const Digest& digest, const Scalar& sk,
                            const BilinearGroup& group);

// True iff e(delta, g) == e(hash_to_group(digest), pk). Identity pk or delta
// is rejected. Elements from another backend, elements in GT, or curve
// elements lacking the images needed for the pairing throw DecodeError.
bool proof_verify(const Proof& proof, const GroupElement& pk,
                  const BilinearGroup& group);

// Decodes both arguments first; malformed bytes throw DecodeError.
bool proof_verify(ByteSpan proof_bytes, ByteSpan pk_bytes,
                  const BilinearGroup& group);

// tag || delta || digest
Bytes encode_proof(const Proof& proof, const BilinearGroup& group);
Proof decode_proof(ByteSpan bytes, const BilinearGroup& group);

}  // namespace pcft::crypto

#endif  // PCFT_CRYPTO_PROOF_H_
