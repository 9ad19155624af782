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

#include "pcft/crypto/bls12_381/tower.h"

#include <array>

namespace pcft::crypto::bls12_381 {

namespace {

const Fp& half() {
  static const Fp kHalf = Fp::from_u64(2).inverse();
  return kHalf;
}

// gamma[j] = xi^(j (p - 1) / 6), so that (a w^j)^p = conj(a) gamma[j] w^j.
const std::array<Fp2, 6>& frobenius_gammas() {
  static const std::array<Fp2, 6> kGammas = [] {
    Fp2 xi{Fp::one(), Fp::one()};
    BigInt<6> e = sub_small(Fp::kModulus, 1);
    // (p - 1) / 6 via division by 2 and then by 3.
    e = shr(e, 1);
    BigInt<6> q;
    u128 rem = 0;
    for (size_t i = 6; i-- > 0;) {
      u128 cur = (rem << 64) | e.limbs[i];
      q.limbs[i] = static_cast<uint64_t>(cur / 3);
      rem = cur % 3;
    }
    std::array<Fp2, 6> g;
    g[0] = Fp2::one();
    g[1] = xi.pow(q);
    for (size_t j = 2; j < 6; ++j) g[j] = g[j - 1] * g[1];
    return g;
  }();
  return kGammas;
}

}  // namespace

std::optional<Fp2> Fp2::sqrt() const {
  if (c1.is_zero()) {
    if (std::optional<Fp> r = c0.sqrt()) return Fp2{*r, Fp::zero()};
    // -1 is a non-residue mod p, so -c0 is a square here.
    std::optional<Fp> r = (-c0).sqrt();
    if (!r) return std::nullopt;
    return Fp2{Fp::zero(), *r};
  }
  std::optional<Fp> delta = norm().sqrt();
  if (!delta) return std::nullopt;
  Fp t = (c0 + *delta) * half();
  if (!t.is_square()) t = (c0 - *delta) * half();
  std::optional<Fp> x0 = t.sqrt();
  if (!x0) return std::nullopt;
  Fp x1 = c1 * (x0->dbl()).inverse();
  Fp2 r{*x0, x1};
  if (r.square() != *this) return std::nullopt;
  return r;
}

Fp12 Fp12::frobenius() const {
  const std::array<Fp2, 6>& g = frobenius_gammas();
  // c0 holds w^0, w^2, w^4; c1 holds w^1, w^3, w^5.
  return {{c0.c0.conjugate(), c0.c1.conjugate() * g[2],
           c0.c2.conjugate() * g[4]},
          {c1.c0.conjugate() * g[1], c1.c1.conjugate() * g[3],
           c1.c2.conjugate() * g[5]}};
}

namespace {

// (a + b t)^2 in Fp2[t] / (t^2 - xi).
std::pair<Fp2, Fp2> fp4_square(const Fp2& a, const Fp2& b) {
  Fp2 t0 = a.square();
  Fp2 t1 = b.square();
  return {t1.mul_by_nonresidue() + t0, (a + b).square() - t0 - t1};
}

}  // namespace

Fp12 Fp12::cyclotomic_square() const {
  Fp2 z0 = c0.c0, z4 = c0.c1, z3 = c0.c2;
  Fp2 z2 = c1.c0, z1 = c1.c1, z5 = c1.c2;

  auto [t0, t1] = fp4_square(z0, z1);
  z0 = t0 - z0;
  z0 = z0.dbl() + t0;
  z1 = t1 + z1;
  z1 = z1.dbl() + t1;

  auto [t2, t3] = fp4_square(z2, z3);
  auto [t4, t5] = fp4_square(z4, z5);
  z4 = t2 - z4;
  z4 = z4.dbl() + t2;
  z5 = t3 + z5;
  z5 = z5.dbl() + t3;

  Fp2 t6 = t5.mul_by_nonresidue();
  z2 = t6 + z2;
  z2 = z2.dbl() + t6;
  z3 = t4 - z3;
  z3 = z3.dbl() + t4;

  return {{z0, z4, z3}, {z2, z1, z5}};
}

}  // namespace pcft::crypto::bls12_381
