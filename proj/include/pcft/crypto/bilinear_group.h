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

// A bilinear group (G, GT, e) with a symmetric-looking interface.
//
// Two backends:
//   kProductionCurve  BLS12-381. An element of G is carried by its G1 image,
//                     its G2 image, or both. The generator and anything
//                     derived from it by pow() carry both; hash_to_group()
//                     yields G1 only. e(a, b) pairs the G1 image of one
//                     argument with the G2 image of the other.
//   kToyExponent      Elements are discrete logs modulo a small prime p;
//                     e(g^a, g^b) = e(g, g)^(ab). Insecure, test oracle only.
//
// Encodings start with a one-byte tag:
//   0x11 curve G, G1 only      48-byte compressed G1
//   0x12 curve G, G2 only      96-byte compressed G2
//   0x13 curve G, both         G1 then G2
//   0x14 curve GT              576 bytes, 12 Fp coefficients big-endian
//   0x21 toy G                 4-byte big-endian exponent
//   0x23 toy GT                4-byte big-endian exponent

#ifndef PCFT_CRYPTO_BILINEAR_GROUP_H_
#define PCFT_CRYPTO_BILINEAR_GROUP_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "pcft/common/bytes.h"
#include "pcft/crypto/bigint.h"
#include "pcft/crypto/bls12_381/curve.h"
#include "pcft/crypto/bls12_381/tower.h"

namespace pcft::crypto {

enum class BackendId { kProductionCurve, kToyExponent };
enum class GroupTag { kG, kGT };

const char* backend_name(BackendId id);

// Integer in [0, order). Range is enforced by the group that consumes it.
class Scalar {
 public:
  static constexpr size_t kEncodedSize = 32;

  Scalar() = default;
  explicit Scalar(const BigInt<4>& value) : value_(value) {}

  const BigInt<4>& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  std::array<uint8_t, kEncodedSize> encode() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  BigInt<4> value_;
};

struct CurveG {
  std::optional<bls12_381::G1> g1;
  std::optional<bls12_381::G2> g2;

  friend bool operator==(const CurveG&, const CurveG&) = default;
};

class GroupElement {
 public:
  BackendId backend() const { return backend_; }
  GroupTag tag() const { return tag_; }

  // Backend payloads. Each accessor requires the matching backend and tag.
  uint32_t toy_exponent() const { return std::get<uint32_t>(value_); }
  const CurveG& curve_g() const { return std::get<CurveG>(value_); }
  const bls12_381::Fp12& curve_gt() const {
    return std::get<bls12_381::Fp12>(value_);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  friend class ToyBackend;
  friend class CurveBackend;

  GroupElement(BackendId b, GroupTag t,
               std::variant<uint32_t, CurveG, bls12_381::Fp12> v)
      : backend_(b), tag_(t), value_(std::move(v)) {}

  BackendId backend_;
  GroupTag tag_;
  std::variant<uint32_t, CurveG, bls12_381::Fp12> value_;
};

class Backend;

// Immutable handle; copies share the backend.
class BilinearGroup {
 public:
  static BilinearGroup production_curve();
  // `p` must be prime and below 2^31. Throws Error(kConfigError) otherwise.
  static BilinearGroup toy_exponent(uint32_t p = 1009);

  BackendId backend_id() const;
  const BigInt<4>& order() const;
  // Order as a machine word; only meaningful for the toy backend.
  uint64_t small_order() const { return order().limbs[0]; }

  GroupElement generator() const;
  GroupElement identity(GroupTag tag) const;
  bool is_identity(const GroupElement& a) const;

  // Group operation in G or GT. Throws Error(kGroupMismatch) if the tags or
  // backends differ, or for curve elements without a common image.
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement pow(const GroupElement& a, const Scalar& k) const;

  // e : G x G -> GT. Throws Error(kGroupMismatch) if either argument is not
  // in G of this backend or the curve images cannot be paired.
  GroupElement pairing(const GroupElement& a, const GroupElement& b) const;
  // e(a, b) == e(c, d); same errors as pairing(). Cheaper than comparing two
  // pairings on the curve backend.
  bool pairings_equal(const GroupElement& a, const GroupElement& b,
                      const GroupElement& c, const GroupElement& d) const;

  // The same element in the smallest form that still pairs with every
  // hash_to_group() output. On the curve this keeps only the G2 image, so a
  // public key distributed this way decodes without the image-consistency
  // pairing check. Identity map on the toy backend.
  GroupElement pairing_partner_form(const GroupElement& a) const;

  // Deterministic map from a 32-byte digest into G.
  GroupElement hash_to_group(const Digest& digest) const;

  Bytes encode(const GroupElement& a) const;
  // Decodes one element from the front of `bytes`; sets `*consumed` to the
  // number of bytes used. Throws DecodeError; error offsets are shifted by
  // `base_offset`.
  GroupElement decode(ByteSpan bytes, size_t* consumed = nullptr,
                      size_t base_offset = 0) const;
  // Decodes and requires that `bytes` holds exactly one element.
  GroupElement decode_exact(ByteSpan bytes) const;

  // Reduction of a big-endian integer of any length modulo the order.
  Scalar scalar_from_bytes_mod(ByteSpan bytes) const;
  Scalar scalar_from_u64(uint64_t v) const;
  bool is_valid_scalar(const Scalar& s) const;
  // 32-byte big-endian; DecodeError if out of range.
  Scalar decode_scalar(ByteSpan bytes, size_t base_offset = 0) const;

  friend bool operator==(const BilinearGroup& a, const BilinearGroup& b);

 private:
  explicit BilinearGroup(std::shared_ptr<const Backend> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Backend> impl_;
};

}  // namespace pcft::crypto

#endif  // PCFT_CRYPTO_BILINEAR_GROUP_H_
