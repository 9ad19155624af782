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

#include "pcft/crypto/proof.h"

#include <algorithm>

#include "pcft/common/error.h"
#include "pcft/crypto/sha256.h"

namespace pcft::crypto {

namespace {

constexpr std::string_view kKeyGenDomain = "pcft/keygen";

void check_sk(const BilinearGroup& group, const Scalar& sk) {
  if (sk.is_zero() || !group.is_valid_scalar(sk)) {
    throw Error(ErrorCode::kInvalidScalar, "secret key must be in [1, order)");
  }
}

void check_g(const GroupElement& e, const BilinearGroup& group,
             const char* what) {
  if (e.backend() != group.backend_id() || e.tag() != GroupTag::kG) {
    throw DecodeError(0, std::string(what) + " is not an element of G");
  }
}

}  // namespace

KeyPair key_gen(const BilinearGroup& group,
                const std::array<uint8_t, 32>& rng_seed, ByteSpan key_id) {
  for (uint32_t ctr = 0;; ++ctr) {
    Bytes wide;
    for (uint8_t half : {0, 1}) {
      Sha256 h;
      h.update(as_span(kKeyGenDomain)).update(rng_seed);
      Bytes tail;
      append_u32_be(tail, ctr);
      tail.push_back(half);
      h.update(tail);
      Digest d = h.finish();
      append(wide, d);
    }
    Scalar sk = group.scalar_from_bytes_mod(wide);
    if (!sk.is_zero()) return key_from_scalar(group, sk, key_id);
  }
}

KeyPair key_from_scalar(const BilinearGroup& group, const Scalar& sk,
                        ByteSpan key_id) {
  check_sk(group, sk);
  return KeyPair{sk, group.pow(group.generator(), sk),
                 Bytes(key_id.begin(), key_id.end())};
}

Proof proof_gen(ByteSpan message, const Scalar& sk, const BilinearGroup& group) {
  return proof_gen_from_digest(hash_to_digest(message), sk, group);
}

Proof proof_gen_from_digest(const Digest& digest, const Scalar& sk,
                            const BilinearGroup& group) {
  check_sk(group, sk);
  return Proof{group.pow(group.hash_to_group(digest), sk), digest};
}

bool proof_verify(const Proof& proof, const GroupElement& pk,
                  const BilinearGroup& group) {
  check_g(proof.delta, group, "delta");
  check_g(pk, group, "pk");
  if (group.is_identity(pk) || group.is_identity(proof.delta)) return false;
  GroupElement h = group.hash_to_group(proof.digest);
  try {
    return group.pairings_equal(proof.delta, group.generator(), h, pk);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGroupMismatch) throw;
    throw DecodeError(0, e.what());
  }
}

bool proof_verify(ByteSpan proof_bytes, ByteSpan pk_bytes,
                  const BilinearGroup& group) {
  Proof proof = decode_proof(proof_bytes, group);
  GroupElement pk = group.decode_exact(pk_bytes);
  return proof_verify(proof, pk, group);
}

Bytes encode_proof(const Proof& proof, const BilinearGroup& group) {
  Bytes out{kProofTag};
  append(out, group.encode(proof.delta));
  append(out, proof.digest);
  return out;
}

Proof decode_proof(ByteSpan bytes, const BilinearGroup& group) {
  if (bytes.empty()) throw DecodeError(0, "empty proof");
  if (bytes[0] != kProofTag) throw DecodeError(0, "bad proof tag");
  size_t used = 0;
  GroupElement delta = group.decode(bytes.subspan(1), &used, 1);
  size_t pos = 1 + used;
  if (bytes.size() < pos + 32) throw DecodeError(bytes.size(), "truncated digest");
  if (bytes.size() > pos + 32) throw DecodeError(pos + 32, "trailing bytes");
  Proof p{delta, {}};
  std::copy_n(bytes.begin() + pos, 32, p.digest.begin());
  return p;
}

}  // namespace pcft::crypto
