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

#include "pcft/crypto/bls12_381/curve.h"

#include <algorithm>

#include "pcft/common/error.h"

namespace pcft::crypto::bls12_381 {

namespace {

constexpr uint8_t kFlagCompressed = 0x80;
constexpr uint8_t kFlagInfinity = 0x40;
constexpr uint8_t kFlagLargest = 0x20;
constexpr uint8_t kFlagMask = 0xe0;

// Reads a 48-byte big-endian field element after masking the flag bits.
Fp read_fp(ByteSpan in, bool mask_flags, size_t offset) {
  std::array<uint8_t, 48> buf;
  std::copy(in.begin(), in.begin() + 48, buf.begin());
  if (mask_flags) buf[0] &= static_cast<uint8_t>(~kFlagMask);
  std::optional<Fp> f = Fp::from_canonical(BigInt<6>::from_be_bytes(buf));
  if (!f) throw DecodeError(offset, "coordinate not below field modulus");
  return *f;
}

// Common flag handling. Returns true if the encoding is the identity.
bool read_flags(ByteSpan in, size_t size, size_t offset, bool* largest) {
  if (in.size() < size) throw DecodeError(offset + in.size(), "truncated point");
  uint8_t flags = in[0] & kFlagMask;
  if ((flags & kFlagCompressed) == 0) {
    throw DecodeError(offset, "uncompressed point encoding");
  }
  *largest = (flags & kFlagLargest) != 0;
  if ((flags & kFlagInfinity) != 0) {
    if (*largest || (in[0] & ~kFlagMask) != 0 ||
        !std::all_of(in.begin() + 1, in.begin() + size,
                     [](uint8_t b) { return b == 0; })) {
      throw DecodeError(offset, "non-canonical point at infinity");
    }
    return true;
  }
  return false;
}

}  // namespace

const Fp& G1Params::b() {
  static const Fp kB = Fp::from_u64(4);
  return kB;
}

const Fp2& G2Params::b() {
  static const Fp2 kB{Fp::from_u64(4), Fp::from_u64(4)};
  return kB;
}

const G1& g1_generator() {
  static const G1 kGen = G1::from_affine(
      {Fp::from_hex("17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f1"
                    "71bac586c55e83ff97a1aeffb3af00adb22c6bb"),
       Fp::from_hex("08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2"
                    "c04b3edd03cc744a2888ae40caa232946c5e7e1"),
       false});
  return kGen;
}

const G2& g2_generator() {
  static const G2 kGen = G2::from_affine(
      {{Fp::from_hex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b64"
                     "7ae3d1770bac0326a805bbefd48056c8c121bdb8"),
        Fp::from_hex("13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bb"
                     "dc7f5049334cf11213945d57e5ac7d055d042b7e")},
       {Fp::from_hex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a69"
                     "5160d12c923ac9cc3baca289e193548608b82801"),
        Fp::from_hex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab"
                     "572e99ab3f370d275cec1da1aaa9075ff05f79be")},
       false});
  return kGen;
}

std::array<uint8_t, kG1CompressedSize> compress(const G1& p) {
  std::array<uint8_t, kG1CompressedSize> out{};
  G1Affine a = p.to_affine();
  if (a.infinity) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  a.x.to_be_bytes(out);
  out[0] |= kFlagCompressed;
  if (a.y.lexicographically_largest()) out[0] |= kFlagLargest;
  return out;
}

std::array<uint8_t, kG2CompressedSize> compress(const G2& p) {
  std::array<uint8_t, kG2CompressedSize> out{};
  G2Affine a = p.to_affine();
  if (a.infinity) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  a.x.c1.to_be_bytes(std::span(out).first(48));
  a.x.c0.to_be_bytes(std::span(out).last(48));
  out[0] |= kFlagCompressed;
  if (a.y.lexicographically_largest()) out[0] |= kFlagLargest;
  return out;
}

G1 decompress_g1(ByteSpan in, size_t offset) {
  bool largest = false;
  if (read_flags(in, kG1CompressedSize, offset, &largest)) return G1::identity();
  Fp x = read_fp(in, true, offset);
  std::optional<Fp> y = (x.square() * x + G1Params::b()).sqrt();
  if (!y) throw DecodeError(offset, "x is not on the curve");
  if (y->lexicographically_largest() != largest) *y = -*y;
  G1 p = G1::from_affine({x, *y, false});
  if (!p.in_subgroup()) throw DecodeError(offset, "point not in subgroup");
  return p;
}

G2 decompress_g2(ByteSpan in, size_t offset) {
  bool largest = false;
  if (read_flags(in, kG2CompressedSize, offset, &largest)) return G2::identity();
  Fp2 x{read_fp(in.subspan(48), false, offset + 48), read_fp(in, true, offset)};
  std::optional<Fp2> y = (x.square() * x + G2Params::b()).sqrt();
  if (!y) throw DecodeError(offset, "x is not on the twist");
  if (y->lexicographically_largest() != largest) *y = -*y;
  G2 p = G2::from_affine({x, *y, false});
  if (!p.in_subgroup()) throw DecodeError(offset, "point not in subgroup");
  return p;
}

}  // namespace pcft::crypto::bls12_381
