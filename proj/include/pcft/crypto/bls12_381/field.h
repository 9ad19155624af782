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

#ifndef PCFT_CRYPTO_BLS12_381_FIELD_H_
#define PCFT_CRYPTO_BLS12_381_FIELD_H_

#include <cassert>
#include <optional>
#include <span>
#include <string_view>

#include "pcft/crypto/bigint.h"

namespace pcft::crypto::bls12_381 {

namespace detail {

template <size_t N>
constexpr uint64_t montgomery_inv(const BigInt<N>& m) {
  // Newton iteration for m^-1 mod 2^64, then negate.
  uint64_t inv = 1;
  for (int i = 0; i < 6; ++i) inv *= 2 - m.limbs[0] * inv;
  return ~inv + 1;
}

template <size_t N>
constexpr BigInt<N> pow2_mod(size_t exponent, const BigInt<N>& m) {
  BigInt<N> r = BigInt<N>::from_u64(1);
  for (size_t i = 0; i < exponent; ++i) r = double_mod(r, m);
  return r;
}

}  // namespace detail

// Prime field Z/pZ in Montgomery representation. `Params::kModulus` must be
// an odd prime whose top bit is clear.
template <class Params>
class PrimeField {
 public:
  static constexpr size_t kLimbs = decltype(Params::kModulus)::kLimbs;
  using Repr = BigInt<kLimbs>;

  static constexpr Repr kModulus = Params::kModulus;
  static constexpr uint64_t kInv = detail::montgomery_inv(kModulus);
  static constexpr Repr kR = detail::pow2_mod(64 * kLimbs, kModulus);
  static constexpr Repr kR2 = detail::pow2_mod(128 * kLimbs, kModulus);
  static constexpr size_t kBits = kModulus.bit_length();
  static constexpr size_t kByteLen = (kBits + 7) / 8;

  static_assert(kModulus.is_odd());
  static_assert((kModulus.limbs[kLimbs - 1] >> 63) == 0);

  constexpr PrimeField() = default;

  static constexpr PrimeField zero() { return PrimeField(); }
  static constexpr PrimeField one() { return from_mont(kR); }

  static constexpr PrimeField from_u64(uint64_t v) {
    Repr r = Repr::from_u64(v);
    while (r >= kModulus) sub_in_place(r, kModulus);
    return from_mont(mont_mul(r, kR2));
  }

  // Returns nullopt if `v >= p`.
  static constexpr std::optional<PrimeField> from_canonical(const Repr& v) {
    if (v >= kModulus) return std::nullopt;
    return from_mont(mont_mul(v, kR2));
  }

  // Hex literal that must denote a value below p.
  static constexpr PrimeField from_hex(std::string_view hex) {
    std::optional<PrimeField> f = from_canonical(Repr::from_hex(hex));
    if (!f) throw std::invalid_argument("field constant out of range");
    return *f;
  }

  // Big-endian integer of any length, reduced mod p.
  static PrimeField from_be_bytes_mod(ByteSpan bytes) {
    return *from_canonical(reduce_be_bytes(bytes, kModulus));
  }

  constexpr Repr to_repr() const { return mont_mul(m_, Repr::from_u64(1)); }

  // Exactly kByteLen bytes, big-endian.
  void to_be_bytes(std::span<uint8_t> out) const {
    assert(out.size() == kByteLen);
    to_repr().to_be_bytes(out);
  }

  constexpr bool is_zero() const { return m_.is_zero(); }
  constexpr bool is_one() const { return m_ == kR; }
  friend constexpr bool operator==(const PrimeField&, const PrimeField&) = default;

  friend constexpr PrimeField operator+(const PrimeField& a,
                                        const PrimeField& b) {
    Repr r = a.m_;
    uint64_t carry = add_in_place(r, b.m_);
    if (carry != 0 || r >= kModulus) sub_in_place(r, kModulus);
    return from_mont(r);
  }

  friend constexpr PrimeField operator-(const PrimeField& a,
                                        const PrimeField& b) {
    Repr r = a.m_;
    if (sub_in_place(r, b.m_) != 0) add_in_place(r, kModulus);
    return from_mont(r);
  }

  constexpr PrimeField operator-() const { return zero() - *this; }

  friend constexpr PrimeField operator*(const PrimeField& a,
                                        const PrimeField& b) {
    return from_mont(mont_mul(a.m_, b.m_));
  }

  constexpr PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
  constexpr PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
  constexpr PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

  constexpr PrimeField square() const { return *this * *this; }
  constexpr PrimeField dbl() const { return *this + *this; }

  template <size_t M>
  constexpr PrimeField pow(const BigInt<M>& e) const {
    PrimeField acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }

  // Fermat inversion; zero maps to zero.
  constexpr PrimeField inverse() const {
    return pow(sub_small(kModulus, 2));
  }

  // Euler's criterion. Zero counts as a square.
  constexpr bool is_square() const {
    if (is_zero()) return true;
    return pow(shr(sub_small(kModulus, 1), 1)).is_one();
  }

  // Square root for p = 3 mod 4: a^((p+1)/4), checked.
  std::optional<PrimeField> sqrt() const
    requires(Params::kModulus.limbs[0] % 4 == 3)
  {
    static constexpr Repr kExp = shr(add_small(kModulus, 1), 2);
    PrimeField r = pow(kExp);
    if (r.square() != *this) return std::nullopt;
    return r;
  }

  // Parity of the canonical representative.
  bool sgn0() const { return to_repr().is_odd(); }

  // True iff the canonical value exceeds (p-1)/2.
  bool lexicographically_largest() const {
    static constexpr Repr kHalf = shr(sub_small(kModulus, 1), 1);
    return to_repr() > kHalf;
  }

 private:
  static constexpr PrimeField from_mont(const Repr& m) {
    PrimeField f;
    f.m_ = m;
    return f;
  }

  // CIOS Montgomery multiplication: a * b * R^-1 mod p.
  static constexpr Repr mont_mul(const Repr& a, const Repr& b) {
    constexpr size_t N = kLimbs;
    uint64_t t[N + 2] = {};
#pragma GCC unroll 8
    for (size_t i = 0; i < N; ++i) {
      uint64_t c = 0;
#pragma GCC unroll 8
      for (size_t j = 0; j < N; ++j) {
        u128 s = u128{t[j]} + u128{a.limbs[j]} * b.limbs[i] + c;
        t[j] = static_cast<uint64_t>(s);
        c = static_cast<uint64_t>(s >> 64);
      }
      u128 s = u128{t[N]} + c;
      t[N] = static_cast<uint64_t>(s);
      t[N + 1] = static_cast<uint64_t>(s >> 64);

      uint64_t m = t[0] * kInv;
      s = u128{t[0]} + u128{m} * kModulus.limbs[0];
      c = static_cast<uint64_t>(s >> 64);
#pragma GCC unroll 8
      for (size_t j = 1; j < N; ++j) {
        s = u128{t[j]} + u128{m} * kModulus.limbs[j] + c;
        t[j - 1] = static_cast<uint64_t>(s);
        c = static_cast<uint64_t>(s >> 64);
      }
      s = u128{t[N]} + c;
      t[N - 1] = static_cast<uint64_t>(s);
      t[N] = t[N + 1] + static_cast<uint64_t>(s >> 64);
    }
    Repr r;
    for (size_t i = 0; i < N; ++i) r.limbs[i] = t[i];
    if (t[N] != 0 || r >= kModulus) sub_in_place(r, kModulus);
    return r;
  }

  Repr m_{};
};

struct FpParams {
  static constexpr BigInt<6> kModulus = BigInt<6>::from_hex(
      "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfff"
      "eb153ffffb9feffffffffaaab");
};

struct FrParams {
  static constexpr BigInt<4> kModulus = BigInt<4>::from_hex(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
};

// Base field of BLS12-381.
using Fp = PrimeField<FpParams>;
// Scalar field: the prime order r of G1, G2 and GT.
using Fr = PrimeField<FrParams>;

// |x| for the curve parameter x = -0xd201000000010000.
inline constexpr uint64_t kCurveXAbs = 0xd201000000010000ULL;

}  // namespace pcft::crypto::bls12_381

#endif  // PCFT_CRYPTO_BLS12_381_FIELD_H_
