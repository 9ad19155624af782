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

// G1: y^2 = x^3 + 4 over Fp.
// G2: y^2 = x^3 + 4(u + 1) over Fp2 (M-type sextic twist).

#ifndef PCFT_CRYPTO_BLS12_381_CURVE_H_
#define PCFT_CRYPTO_BLS12_381_CURVE_H_

#include <array>
#include <cstddef>

#include "pcft/common/bytes.h"
#include "pcft/crypto/bls12_381/tower.h"

namespace pcft::crypto::bls12_381 {

template <class F>
struct AffinePoint {
  F x, y;
  bool infinity = true;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

struct G1Params {
  using Field = Fp;
  static const Fp& b();
};

struct G2Params {
  using Field = Fp2;
  static const Fp2& b();
};

// Point in Jacobian coordinates (X/Z^2, Y/Z^3); Z = 0 is the identity.
template <class Params>
class JacobianPoint {
 public:
  using F = typename Params::Field;
  using Affine = AffinePoint<F>;

  JacobianPoint() : x_(F::one()), y_(F::one()), z_(F::zero()) {}

  static JacobianPoint identity() { return JacobianPoint(); }

  static JacobianPoint from_affine(const Affine& a) {
    if (a.infinity) return identity();
    return JacobianPoint(a.x, a.y, F::one());
  }

  static bool on_curve(const Affine& a) {
    if (a.infinity) return true;
    return a.y.square() == a.x.square() * a.x + Params::b();
  }

  bool is_identity() const { return z_.is_zero(); }

  const F& x() const { return x_; }
  const F& y() const { return y_; }
  const F& z() const { return z_; }

  Affine to_affine() const {
    if (is_identity()) return Affine{};
    F zi = z_.inverse();
    F zi2 = zi.square();
    return Affine{x_ * zi2, y_ * zi2 * zi, false};
  }

  // dbl-2009-l
  JacobianPoint dbl() const {
    if (is_identity()) return *this;
    F a = x_.square();
    F b = y_.square();
    F c = b.square();
    F d = ((x_ + b).square() - a - c).dbl();
    F e = a.dbl() + a;
    F f = e.square();
    F x3 = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y_ * z_).dbl();
    return JacobianPoint(x3, y3, z3);
  }

  // add-2007-bl
  friend JacobianPoint operator+(const JacobianPoint& p,
                                 const JacobianPoint& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    F z1z1 = p.z_.square();
    F z2z2 = q.z_.square();
    F u1 = p.x_ * z2z2;
    F u2 = q.x_ * z1z1;
    F s1 = p.y_ * q.z_ * z2z2;
    F s2 = q.y_ * p.z_ * z1z1;
    F h = u2 - u1;
    F r = (s2 - s1).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return p.dbl();
      return identity();
    }
    F i = h.dbl().square();
    F j = h * i;
    F v = u1 * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (s1 * j).dbl();
    F z3 = ((p.z_ + q.z_).square() - z1z1 - z2z2) * h;
    return JacobianPoint(x3, y3, z3);
  }

  JacobianPoint& operator+=(const JacobianPoint& o) { return *this = *this + o; }

  JacobianPoint operator-() const { return JacobianPoint(x_, -y_, z_); }

  friend JacobianPoint operator-(const JacobianPoint& p,
                                 const JacobianPoint& q) {
    return p + (-q);
  }

  template <size_t M>
  JacobianPoint mul(const BigInt<M>& k) const {
    JacobianPoint acc;
    for (size_t i = k.bit_length(); i-- > 0;) {
      acc = acc.dbl();
      if (k.bit(i)) acc += *this;
    }
    return acc;
  }

  // r * P == O, with r the prime subgroup order.
  bool in_subgroup() const { return mul(Fr::kModulus).is_identity(); }

  friend bool operator==(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.is_identity() || q.is_identity()) {
      return p.is_identity() && q.is_identity();
    }
    F z1z1 = p.z_.square();
    F z2z2 = q.z_.square();
    return p.x_ * z2z2 == q.x_ * z1z1 &&
           p.y_ * z2z2 * q.z_ == q.y_ * z1z1 * p.z_;
  }

 private:
  JacobianPoint(const F& x, const F& y, const F& z) : x_(x), y_(y), z_(z) {}

  F x_, y_, z_;
};

using G1 = JacobianPoint<G1Params>;
using G2 = JacobianPoint<G2Params>;
using G1Affine = G1::Affine;
using G2Affine = G2::Affine;

const G1& g1_generator();
const G2& g2_generator();

inline constexpr size_t kG1CompressedSize = 48;
inline constexpr size_t kG2CompressedSize = 96;

// Compressed encodings in the common BLS12-381 format: big-endian x with
// the three top bits of the first byte used as flags (compressed, infinity,
// y is the larger root). G2 writes x.c1 before x.c0.
std::array<uint8_t, kG1CompressedSize> compress(const G1& p);
std::array<uint8_t, kG2CompressedSize> compress(const G2& p);

// Both reject non-canonical flags, off-curve points and points outside the
// prime-order subgroup with DecodeError. `offset` is added to reported
// error positions.
G1 decompress_g1(ByteSpan bytes, size_t offset = 0);
G2 decompress_g2(ByteSpan bytes, size_t offset = 0);

}  // namespace pcft::crypto::bls12_381

#endif  // PCFT_CRYPTO_BLS12_381_CURVE_H_
