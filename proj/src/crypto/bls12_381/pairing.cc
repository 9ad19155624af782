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

#include "pcft/crypto/bls12_381/pairing.h"

namespace pcft::crypto::bls12_381 {

namespace {

// Sparse line value c00 + c01 w^2 + c11 w^3. Lines are scaled by w^3 and by
// factors in Fp2; both vanish under the final exponentiation.
struct Line {
  Fp2 c00, c01, c11;
};

Fp12 operator*(const Fp12& f, const Line& l) { return f.mul_by_line(l.c00, l.c01, l.c11); }

// Tangent at T = (X, Y, Z) (Jacobian), evaluated at P. With
// lambda = 3X^2 / (2YZ), multiplied through by 2YZ^3.
Line tangent_line(const G2& t, const G1Affine& p) {
  Fp2 x2 = t.x().square();
  Fp2 x2_3 = x2.dbl() + x2;
  Fp2 z2 = t.z().square();
  Fp2 c00 = x2_3 * t.x() - t.y().square().dbl();
  Fp2 c01 = -(x2_3 * z2).mul_by_fp(p.x);
  Fp2 c11 = (t.y() * z2 * t.z()).dbl().mul_by_fp(p.y);
  return {c00, c01, c11};
}

// Chord through T and affine Q, evaluated at P. With
// lambda = (yQ Z^3 - Y) / (Z (xQ Z^2 - X)), multiplied by the denominator.
Line chord_line(const G2& t, const G2Affine& q, const G1Affine& p) {
  Fp2 z2 = t.z().square();
  Fp2 n = q.y * z2 * t.z() - t.y();
  Fp2 d = t.z() * (q.x * z2 - t.x());
  Fp2 c00 = n * q.x - q.y * d;
  Fp2 c01 = -n.mul_by_fp(p.x);
  Fp2 c11 = d.mul_by_fp(p.y);
  return {c00, c01, c11};
}

// a^|x| then conjugate, i.e. a^x for a in the cyclotomic subgroup.
Fp12 pow_x(const Fp12& a) {
  Fp12 acc = a;
  for (int i = 62; i >= 0; --i) {
    acc = acc.cyclotomic_square();
    if ((kCurveXAbs >> i) & 1) acc *= a;
  }
  return acc.conjugate();
}

}  // namespace

Fp12 miller_loop(const G1Affine& p, const G2Affine& q) {
  if (p.infinity || q.infinity) return Fp12::one();
  Fp12 f = Fp12::one();
  const G2 qj = G2::from_affine(q);
  G2 t = qj;
  for (int i = 62; i >= 0; --i) {
    f = f.square() * tangent_line(t, p);
    t = t.dbl();
    if ((kCurveXAbs >> i) & 1) {
      f = f * chord_line(t, q, p);
      t += qj;
    }
  }
  // The loop parameter is negative.
  return f.conjugate();
}

Fp12 final_exponentiation(const Fp12& f) {
  // Easy part: f^((p^6 - 1)(p^2 + 1)).
  Fp12 t = f.conjugate() * f.inverse();
  t = t.frobenius().frobenius() * t;

  // Hard part: 3 (p^4 - p^2 + 1) / r = (x-1)^2 (x+p) (x^2+p^2-1) + 3.
  Fp12 a = pow_x(t) * t.conjugate();
  a = pow_x(a) * a.conjugate();
  Fp12 b = pow_x(a) * a.frobenius();
  Fp12 c = pow_x(pow_x(b)) * b.frobenius().frobenius() * b.conjugate();
  return c * t.cyclotomic_square() * t;
}

Fp12 pairing(const G1& p, const G2& q) {
  return final_exponentiation(miller_loop(p.to_affine(), q.to_affine()));
}

bool pairings_equal(const G1& a, const G2& b, const G1& c, const G2& d) {
  Fp12 f = miller_loop(a.to_affine(), b.to_affine()) *
           miller_loop((-c).to_affine(), d.to_affine());
  return final_exponentiation(f).is_one();
}

}  // namespace pcft::crypto::bls12_381
