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

// Extension tower used by the pairing:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = u + 1
//   Fp12 = Fp6[w] / (w^2 - v)

#ifndef PCFT_CRYPTO_BLS12_381_TOWER_H_
#define PCFT_CRYPTO_BLS12_381_TOWER_H_

#include <optional>

#include "pcft/crypto/bls12_381/field.h"

namespace pcft::crypto::bls12_381 {

struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fp2&, const Fp2&) = default;

  friend Fp2 operator+(const Fp2& a, const Fp2& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  Fp2 operator-() const { return {-c0, -c1}; }

  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp t0 = a.c0 * b.c0;
    Fp t1 = a.c1 * b.c1;
    return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }

  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

  Fp2 square() const {
    Fp t = c0 * c1;
    return {(c0 + c1) * (c0 - c1), t + t};
  }
  Fp2 dbl() const { return *this + *this; }

  Fp2 mul_by_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  // Multiplication by xi = 1 + u.
  Fp2 mul_by_nonresidue() const { return {c0 - c1, c0 + c1}; }

  // Also the p-power Frobenius.
  Fp2 conjugate() const { return {c0, -c1}; }

  Fp norm() const { return c0.square() + c1.square(); }

  Fp2 inverse() const {
    Fp inv = norm().inverse();
    return {c0 * inv, -(c1 * inv)};
  }

  template <size_t M>
  Fp2 pow(const BigInt<M>& e) const {
    Fp2 acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }

  bool is_square() const { return norm().is_square(); }

  std::optional<Fp2> sqrt() const;

  // Ordering used by compressed G2 encodings: compare c1 first, then c0.
  bool lexicographically_largest() const {
    if (!c1.is_zero()) return c1.lexicographically_largest();
    return c0.lexicographically_largest();
  }
};

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Fp6&, const Fp6&) = default;

  friend Fp6 operator+(const Fp6& a, const Fp6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    Fp2 t0 = a.c0 * b.c0;
    Fp2 t1 = a.c1 * b.c1;
    Fp2 t2 = a.c2 * b.c2;
    Fp2 r0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).mul_by_nonresidue() + t0;
    Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.mul_by_nonresidue();
    Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fp6& operator*=(const Fp6& o) { return *this = *this * o; }

  Fp6 square() const { return *this * *this; }

  Fp6 mul_by_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  // Multiplication by v.
  Fp6 mul_by_nonresidue() const { return {c2.mul_by_nonresidue(), c0, c1}; }

  // Product with b0 + b1 v.
  Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const {
    Fp2 t0 = c0 * b0;
    Fp2 t1 = c1 * b1;
    return {(c2 * b1).mul_by_nonresidue() + t0, (c0 + c1) * (b0 + b1) - t0 - t1,
            c2 * b0 + t1};
  }

  // Product with b1 v.
  Fp6 mul_by_1(const Fp2& b1) const {
    return {(c2 * b1).mul_by_nonresidue(), c0 * b1, c1 * b1};
  }

  Fp6 inverse() const {
    Fp2 t0 = c0.square() - (c1 * c2).mul_by_nonresidue();
    Fp2 t1 = c2.square().mul_by_nonresidue() - c0 * c1;
    Fp2 t2 = c1.square() - c0 * c2;
    Fp2 denom = c0 * t0 + (c2 * t1 + c1 * t2).mul_by_nonresidue();
    Fp2 inv = denom.inverse();
    return {t0 * inv, t1 * inv, t2 * inv};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 zero() { return {}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }
  friend bool operator==(const Fp12&, const Fp12&) = default;

  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    Fp6 t0 = a.c0 * b.c0;
    Fp6 t1 = a.c1 * b.c1;
    return {t0 + t1.mul_by_nonresidue(),
            (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }

  Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

  // Product with the sparse element a0 + a1 w^2 + b1 w^3.
  Fp12 mul_by_line(const Fp2& a0, const Fp2& a1, const Fp2& b1) const {
    Fp6 t0 = c0.mul_by_01(a0, a1);
    Fp6 t1 = c1.mul_by_1(b1);
    return {t0 + t1.mul_by_nonresidue(), (c0 + c1).mul_by_01(a0, a1 + b1) - t0 - t1};
  }

  Fp12 square() const {
    Fp6 t = c0 * c1;
    Fp6 r0 = (c0 + c1) * (c0 + c1.mul_by_nonresidue()) - t -
             t.mul_by_nonresidue();
    return {r0, t + t};
  }

  // Squaring valid only in the cyclotomic subgroup (Granger-Scott).
  Fp12 cyclotomic_square() const;

  // Inverse in the cyclotomic subgroup, and the p^6-power Frobenius.
  Fp12 conjugate() const { return {c0, -c1}; }

  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_nonresidue()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  // p-power Frobenius.
  Fp12 frobenius() const;

  template <size_t M>
  Fp12 pow(const BigInt<M>& e) const {
    Fp12 acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
};

}  // namespace pcft::crypto::bls12_381

#endif  // PCFT_CRYPTO_BLS12_381_TOWER_H_
