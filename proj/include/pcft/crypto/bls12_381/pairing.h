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

#ifndef PCFT_CRYPTO_BLS12_381_PAIRING_H_
#define PCFT_CRYPTO_BLS12_381_PAIRING_H_

#include "pcft/crypto/bls12_381/curve.h"
#include "pcft/crypto/bls12_381/tower.h"

namespace pcft::crypto::bls12_381 {

// Optimal ate Miller loop f_{x,Q}(P), without final exponentiation.
Fp12 miller_loop(const G1Affine& p, const G2Affine& q);

// Raises to 3 (p^12 - 1) / r. The extra factor 3 comes from the hard-part
// addition chain; it is coprime to r so the result is still a
// non-degenerate bilinear map.
Fp12 final_exponentiation(const Fp12& f);

// e(P, Q) in GT. Returns one if either input is the identity.
Fp12 pairing(const G1& p, const G2& q);

// e(a, b) == e(c, d), sharing one final exponentiation.
bool pairings_equal(const G1& a, const G2& b, const G1& c, const G2& d);

}  // namespace pcft::crypto::bls12_381

#endif  // PCFT_CRYPTO_BLS12_381_PAIRING_H_
