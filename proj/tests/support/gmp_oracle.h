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

// Arbitrary-precision reference arithmetic used as an independent oracle
// for the fixed-width field and curve code.

#ifndef PCFT_TESTS_SUPPORT_GMP_ORACLE_H_
#define PCFT_TESTS_SUPPORT_GMP_ORACLE_H_

#include <gmpxx.h>

#include <random>
#include <string>

#include "pcft/crypto/bls12_381/curve.h"

namespace pcft::testing {

// Curve parameter x of BLS12-381 (negative).
inline mpz_class curve_x() { return -mpz_class("d201000000010000", 16); }

// r = x^4 - x^2 + 1 and p = (x - 1)^2 r / 3 + x, derived from x alone.
inline mpz_class derived_r() {
  mpz_class x = curve_x();
  return x * x * x * x - x * x + 1;
}

inline mpz_class derived_p() {
  mpz_class x = curve_x();
  mpz_class t = (x - 1) * (x - 1) * derived_r();
  return t / 3 + x;
}

inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

inline mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

template <size_t N>
mpz_class to_mpz(const crypto::BigInt<N>& v) {
  mpz_class r = 0;
  for (size_t i = N; i-- > 0;) {
    r <<= 64;
    r += mpz_class(std::to_string(v.limbs[i]));
  }
  return r;
}

template <size_t N>
crypto::BigInt<N> from_mpz(const mpz_class& v) {
  return crypto::BigInt<N>::from_hex(v.get_str(16));
}

inline mpz_class to_mpz(const crypto::bls12_381::Fp& f) {
  return to_mpz(f.to_repr());
}

inline crypto::bls12_381::Fp fp_from_mpz(const mpz_class& v) {
  return *crypto::bls12_381::Fp::from_canonical(from_mpz<6>(mod(v, derived_p())));
}

inline mpz_class random_below(std::mt19937_64& rng, const mpz_class& bound) {
  mpz_class acc = 0;
  for (int i = 0; i < 8; ++i) {
    acc <<= 64;
    acc += mpz_class(std::to_string(rng()));
  }
  return acc % bound;
}

// Fp2 = Fp[u]/(u^2 + 1) over GMP.
struct MpFp2 {
  mpz_class a, b;
};

inline MpFp2 add(const MpFp2& x, const MpFp2& y) {
  mpz_class p = derived_p();
  return {mod(x.a + y.a, p), mod(x.b + y.b, p)};
}
inline MpFp2 sub(const MpFp2& x, const MpFp2& y) {
  mpz_class p = derived_p();
  return {mod(x.a - y.a, p), mod(x.b - y.b, p)};
}
inline MpFp2 mul(const MpFp2& x, const MpFp2& y) {
  mpz_class p = derived_p();
  return {mod(x.a * y.a - x.b * y.b, p), mod(x.a * y.b + x.b * y.a, p)};
}
inline MpFp2 inv(const MpFp2& x) {
  mpz_class p = derived_p();
  mpz_class n = inv_mod(mod(x.a * x.a + x.b * x.b, p), p);
  return {mod(x.a * n, p), mod(-x.b * n, p)};
}
inline bool operator==(const MpFp2& x, const MpFp2& y) {
  return x.a == y.a && x.b == y.b;
}

inline MpFp2 to_mp(const crypto::bls12_381::Fp2& f) {
  return {to_mpz(f.c0), to_mpz(f.c1)};
}
inline mpz_class to_mp(const crypto::bls12_381::Fp& f) { return to_mpz(f); }

// Affine short-Weierstrass arithmetic (a = 0) over GMP scalars or MpFp2.
template <class T>
struct MpPoint {
  T x, y;
  bool inf = true;
};

inline mpz_class add(const mpz_class& x, const mpz_class& y) {
  return mod(x + y, derived_p());
}
inline mpz_class sub(const mpz_class& x, const mpz_class& y) {
  return mod(x - y, derived_p());
}
inline mpz_class mul(const mpz_class& x, const mpz_class& y) {
  return mod(x * y, derived_p());
}
inline mpz_class inv(const mpz_class& x) { return inv_mod(x, derived_p()); }
inline mpz_class from_int(const mpz_class&, long v) { return mpz_class(v); }
inline MpFp2 from_int(const MpFp2&, long v) { return {mpz_class(v), 0}; }

template <class T>
MpPoint<T> point_add(const MpPoint<T>& p, const MpPoint<T>& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  T lambda;
  if (p.x == q.x) {
    if (!(p.y == q.y) || p.y == from_int(p.y, 0)) return {};
    T three = from_int(p.x, 3);
    T two = from_int(p.x, 2);
    lambda = mul(mul(three, mul(p.x, p.x)), inv(mul(two, p.y)));
  } else {
    lambda = mul(sub(q.y, p.y), inv(sub(q.x, p.x)));
  }
  T x3 = sub(sub(mul(lambda, lambda), p.x), q.x);
  T y3 = sub(mul(lambda, sub(p.x, x3)), p.y);
  return {x3, y3, false};
}

template <class T>
MpPoint<T> point_mul(const MpPoint<T>& p, const mpz_class& k) {
  MpPoint<T> acc;
  size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = point_add(acc, acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = point_add(acc, p);
  }
  return acc;
}

}  // namespace pcft::testing

#endif  // PCFT_TESTS_SUPPORT_GMP_ORACLE_H_
