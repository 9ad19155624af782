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

#include "pcft/crypto/bilinear_group.h"

#include <string>
#include <utility>

#include "pcft/common/error.h"
#include "pcft/crypto/bls12_381/hash_to_curve.h"
#include "pcft/crypto/bls12_381/pairing.h"

namespace pcft::crypto {

using bls12_381::Fp;
using bls12_381::Fp12;
using bls12_381::G1;
using bls12_381::G2;

namespace {

constexpr uint8_t kTagCurveG1 = 0x11;
constexpr uint8_t kTagCurveG2 = 0x12;
constexpr uint8_t kTagCurveBoth = 0x13;
constexpr uint8_t kTagCurveGt = 0x14;
constexpr uint8_t kTagToyG = 0x21;
constexpr uint8_t kTagToyGt = 0x23;

constexpr size_t kGtSize = 12 * 48;

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorCode::kGroupMismatch, what);
}

void require(ByteSpan in, size_t n, size_t offset) {
  if (in.size() < n) throw DecodeError(offset + in.size(), "truncated element");
}

}  // namespace

const char* backend_name(BackendId id) {
  switch (id) {
    case BackendId::kProductionCurve:
      return "curve";
    case BackendId::kToyExponent:
      return "toy";
  }
  return "unknown";
}

std::array<uint8_t, Scalar::kEncodedSize> Scalar::encode() const {
  std::array<uint8_t, kEncodedSize> out;
  value_.to_be_bytes(out);
  return out;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.backend_ != b.backend_ || a.tag_ != b.tag_) return false;
  return a.value_ == b.value_;
}

class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendId id() const = 0;
  virtual const BigInt<4>& order() const = 0;
  virtual GroupElement generator() const = 0;
  virtual GroupElement identity(GroupTag tag) const = 0;
  virtual bool is_identity(const GroupElement& a) const = 0;
  virtual GroupElement mul(const GroupElement& a,
                           const GroupElement& b) const = 0;
  virtual GroupElement pow(const GroupElement& a, const Scalar& k) const = 0;
  virtual GroupElement pairing(const GroupElement& a,
                               const GroupElement& b) const = 0;
  // e(a, b) == e(c, d)
  virtual bool pairings_equal(const GroupElement& a, const GroupElement& b,
                              const GroupElement& c, const GroupElement& d) const {
    return pairing(a, b) == pairing(c, d);
  }
  virtual GroupElement pairing_partner_form(const GroupElement& a) const { return a; }
  virtual GroupElement hash_to_group(const Digest& d) const = 0;
  virtual Bytes encode(const GroupElement& a) const = 0;
  virtual GroupElement decode(ByteSpan in, size_t* consumed,
                              size_t offset) const = 0;
};

class ToyBackend final : public Backend {
 public:
  explicit ToyBackend(uint32_t p) : p_(p), order_(BigInt<4>::from_u64(p)) {}

  BackendId id() const override { return BackendId::kToyExponent; }
  const BigInt<4>& order() const override { return order_; }

  GroupElement generator() const override { return make(GroupTag::kG, 1); }
  GroupElement identity(GroupTag tag) const override { return make(tag, 0); }
  bool is_identity(const GroupElement& a) const override {
    check(a);
    return a.toy_exponent() == 0;
  }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    check(a);
    check(b);
    if (a.tag() != b.tag()) mismatch("mul across G and GT");
    return make(a.tag(), (uint64_t{a.toy_exponent()} + b.toy_exponent()) % p_);
  }

  GroupElement pow(const GroupElement& a, const Scalar& k) const override {
    check(a);
    uint64_t e = reduce_be_bytes(k.encode(), BigInt<1>::from_u64(p_)).limbs[0];
    return make(a.tag(), (uint64_t{a.toy_exponent()} * e) % p_);
  }

  GroupElement pairing(const GroupElement& a,
                       const GroupElement& b) const override {
    check(a);
    check(b);
    if (a.tag() != GroupTag::kG || b.tag() != GroupTag::kG) {
      mismatch("pairing arguments must be in G");
    }
    return make(GroupTag::kGT,
                (uint64_t{a.toy_exponent()} * b.toy_exponent()) % p_);
  }

  GroupElement hash_to_group(const Digest& d) const override {
    uint64_t e = reduce_be_bytes(d, BigInt<1>::from_u64(p_ - 1)).limbs[0];
    return make(GroupTag::kG, e + 1);
  }

  Bytes encode(const GroupElement& a) const override {
    check(a);
    Bytes out{a.tag() == GroupTag::kG ? kTagToyG : kTagToyGt};
    append_u32_be(out, a.toy_exponent());
    return out;
  }

  GroupElement decode(ByteSpan in, size_t* consumed,
                      size_t offset) const override {
    require(in, 5, offset);
    GroupTag tag;
    if (in[0] == kTagToyG) {
      tag = GroupTag::kG;
    } else if (in[0] == kTagToyGt) {
      tag = GroupTag::kGT;
    } else {
      throw DecodeError(offset, "unknown toy element tag");
    }
    uint32_t e = load_u32_be(in.data() + 1);
    if (e >= p_) throw DecodeError(offset + 1, "exponent not below group order");
    if (consumed != nullptr) *consumed = 5;
    return make(tag, e);
  }

 private:
  GroupElement make(GroupTag tag, uint64_t e) const {
    return GroupElement(BackendId::kToyExponent, tag, static_cast<uint32_t>(e));
  }

  void check(const GroupElement& a) const {
    if (a.backend() != BackendId::kToyExponent) mismatch("not a toy element");
  }

  uint32_t p_;
  BigInt<4> order_;
};

class CurveBackend final : public Backend {
 public:
  BackendId id() const override { return BackendId::kProductionCurve; }
  const BigInt<4>& order() const override { return bls12_381::Fr::kModulus; }

  GroupElement generator() const override {
    return make_g(bls12_381::g1_generator(), bls12_381::g2_generator());
  }

  GroupElement identity(GroupTag tag) const override {
    if (tag == GroupTag::kGT) return make_gt(Fp12::one());
    return make_g(G1::identity(), G2::identity());
  }

  bool is_identity(const GroupElement& a) const override {
    check(a);
    if (a.tag() == GroupTag::kGT) return a.curve_gt().is_one();
    const CurveG& c = a.curve_g();
    return c.g1 ? c.g1->is_identity() : c.g2->is_identity();
  }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    check(a);
    check(b);
    if (a.tag() != b.tag()) mismatch("mul across G and GT");
    if (a.tag() == GroupTag::kGT) return make_gt(a.curve_gt() * b.curve_gt());
    const CurveG& x = a.curve_g();
    const CurveG& y = b.curve_g();
    CurveG r;
    if (x.g1 && y.g1) r.g1 = *x.g1 + *y.g1;
    if (x.g2 && y.g2) r.g2 = *x.g2 + *y.g2;
    if (!r.g1 && !r.g2) mismatch("curve elements share no image");
    return GroupElement(BackendId::kProductionCurve, GroupTag::kG, r);
  }

  GroupElement pow(const GroupElement& a, const Scalar& k) const override {
    check(a);
    BigInt<4> e = k.value();
    if (e >= order()) e = reduce_be_bytes(k.encode(), order());
    if (a.tag() == GroupTag::kGT) return make_gt(a.curve_gt().pow(e));
    const CurveG& x = a.curve_g();
    CurveG r;
    if (x.g1) r.g1 = x.g1->mul(e);
    if (x.g2) r.g2 = x.g2->mul(e);
    return GroupElement(BackendId::kProductionCurve, GroupTag::kG, r);
  }

  // The G1 and G2 images to feed the pairing for e(a, b).
  std::pair<bls12_381::G1, bls12_381::G2> images(const GroupElement& a,
                                                 const GroupElement& b) const {
    check(a);
    check(b);
    if (a.tag() != GroupTag::kG || b.tag() != GroupTag::kG) {
      mismatch("pairing arguments must be in G");
    }
    const CurveG& x = a.curve_g();
    const CurveG& y = b.curve_g();
    if (x.g1 && y.g2) return {*x.g1, *y.g2};
    if (x.g2 && y.g1) return {*y.g1, *x.g2};
    mismatch("no G1/G2 combination to pair");
  }

  GroupElement pairing(const GroupElement& a,
                       const GroupElement& b) const override {
    auto [p, q] = images(a, b);
    return make_gt(bls12_381::pairing(p, q));
  }

  bool pairings_equal(const GroupElement& a, const GroupElement& b,
                      const GroupElement& c, const GroupElement& d) const override {
    auto [p1, q1] = images(a, b);
    auto [p2, q2] = images(c, d);
    return bls12_381::pairings_equal(p1, q1, p2, q2);
  }

  GroupElement pairing_partner_form(const GroupElement& a) const override {
    check(a);
    if (a.tag() != GroupTag::kG || !a.curve_g().g2) return a;
    CurveG r;
    r.g2 = a.curve_g().g2;
    return GroupElement(BackendId::kProductionCurve, GroupTag::kG, r);
  }

  GroupElement hash_to_group(const Digest& d) const override {
    CurveG r;
    r.g1 = bls12_381::hash_to_g1(d, as_span(bls12_381::kProtocolDst));
    return GroupElement(BackendId::kProductionCurve, GroupTag::kG, r);
  }

  Bytes encode(const GroupElement& a) const override {
    check(a);
    Bytes out;
    if (a.tag() == GroupTag::kGT) {
      out.reserve(1 + kGtSize);
      out.push_back(kTagCurveGt);
      const Fp12& f = a.curve_gt();
      for (const bls12_381::Fp6* c6 : {&f.c0, &f.c1}) {
        for (const bls12_381::Fp2* c2 : {&c6->c0, &c6->c1, &c6->c2}) {
          for (const Fp* c : {&c2->c0, &c2->c1}) {
            std::array<uint8_t, 48> buf;
            c->to_be_bytes(buf);
            append(out, buf);
          }
        }
      }
      return out;
    }
    const CurveG& c = a.curve_g();
    out.push_back(c.g1 && c.g2 ? kTagCurveBoth : c.g1 ? kTagCurveG1 : kTagCurveG2);
    if (c.g1) append(out, bls12_381::compress(*c.g1));
    if (c.g2) append(out, bls12_381::compress(*c.g2));
    return out;
  }

  GroupElement decode(ByteSpan in, size_t* consumed,
                      size_t offset) const override {
    require(in, 1, offset);
    const uint8_t tag = in[0];
    ByteSpan body = in.subspan(1);
    size_t used = 1;
    GroupElement result = identity(GroupTag::kG);
    if (tag == kTagCurveGt) {
      require(body, kGtSize, offset + 1);
      Fp12 f;
      size_t pos = 0;
      for (bls12_381::Fp6* c6 : {&f.c0, &f.c1}) {
        for (bls12_381::Fp2* c2 : {&c6->c0, &c6->c1, &c6->c2}) {
          for (Fp* c : {&c2->c0, &c2->c1}) {
            std::optional<Fp> v = Fp::from_canonical(
                BigInt<6>::from_be_bytes(body.subspan(pos, 48)));
            if (!v) throw DecodeError(offset + 1 + pos, "GT coefficient too large");
            *c = *v;
            pos += 48;
          }
        }
      }
      if (f.is_zero() || !f.pow(order()).is_one()) {
        throw DecodeError(offset, "GT element outside the order-r subgroup");
      }
      used += kGtSize;
      result = make_gt(f);
    } else if (tag == kTagCurveG1 || tag == kTagCurveG2 || tag == kTagCurveBoth) {
      CurveG c;
      if (tag != kTagCurveG2) {
        require(body, bls12_381::kG1CompressedSize, offset + used);
        c.g1 = bls12_381::decompress_g1(body, offset + used);
        body = body.subspan(bls12_381::kG1CompressedSize);
        used += bls12_381::kG1CompressedSize;
      }
      if (tag != kTagCurveG1) {
        require(body, bls12_381::kG2CompressedSize, offset + used);
        c.g2 = bls12_381::decompress_g2(body, offset + used);
        used += bls12_381::kG2CompressedSize;
      }
      if (tag == kTagCurveBoth &&
          !bls12_381::pairings_equal(*c.g1, bls12_381::g2_generator(),
                                     bls12_381::g1_generator(), *c.g2)) {
        throw DecodeError(offset, "G1 and G2 images disagree");
      }
      result = GroupElement(BackendId::kProductionCurve, GroupTag::kG, c);
    } else {
      throw DecodeError(offset, "unknown curve element tag");
    }
    if (consumed != nullptr) *consumed = used;
    return result;
  }

 private:
  static GroupElement make_g(const G1& a, const G2& b) {
    return GroupElement(BackendId::kProductionCurve, GroupTag::kG, CurveG{a, b});
  }
  static GroupElement make_gt(const Fp12& f) {
    return GroupElement(BackendId::kProductionCurve, GroupTag::kGT, f);
  }
  static void check(const GroupElement& a) {
    if (a.backend() != BackendId::kProductionCurve) {
      mismatch("not a curve element");
    }
  }
};

BilinearGroup BilinearGroup::production_curve() {
  static const std::shared_ptr<const Backend> kCurve =
      std::make_shared<CurveBackend>();
  return BilinearGroup(kCurve);
}

BilinearGroup BilinearGroup::toy_exponent(uint32_t p) {
  bool prime = p >= 3 && p < (1u << 31);
  for (uint32_t d = 2; prime && uint64_t{d} * d <= p; ++d) {
    if (p % d == 0) prime = false;
  }
  if (!prime) {
    throw Error(ErrorCode::kConfigError,
                "toy group order must be an odd prime below 2^31");
  }
  return BilinearGroup(std::make_shared<ToyBackend>(p));
}

BackendId BilinearGroup::backend_id() const { return impl_->id(); }
const BigInt<4>& BilinearGroup::order() const { return impl_->order(); }
GroupElement BilinearGroup::generator() const { return impl_->generator(); }
GroupElement BilinearGroup::identity(GroupTag tag) const {
  return impl_->identity(tag);
}
bool BilinearGroup::is_identity(const GroupElement& a) const {
  return impl_->is_identity(a);
}
GroupElement BilinearGroup::mul(const GroupElement& a,
                                const GroupElement& b) const {
  return impl_->mul(a, b);
}
GroupElement BilinearGroup::pow(const GroupElement& a, const Scalar& k) const {
  return impl_->pow(a, k);
}
GroupElement BilinearGroup::pairing(const GroupElement& a,
                                    const GroupElement& b) const {
  return impl_->pairing(a, b);
}
bool BilinearGroup::pairings_equal(const GroupElement& a, const GroupElement& b,
                                   const GroupElement& c, const GroupElement& d) const {
  return impl_->pairings_equal(a, b, c, d);
}
GroupElement BilinearGroup::pairing_partner_form(const GroupElement& a) const {
  return impl_->pairing_partner_form(a);
}
GroupElement BilinearGroup::hash_to_group(const Digest& digest) const {
  return impl_->hash_to_group(digest);
}
Bytes BilinearGroup::encode(const GroupElement& a) const {
  return impl_->encode(a);
}

GroupElement BilinearGroup::decode(ByteSpan bytes, size_t* consumed,
                                   size_t base_offset) const {
  return impl_->decode(bytes, consumed, base_offset);
}

GroupElement BilinearGroup::decode_exact(ByteSpan bytes) const {
  size_t used = 0;
  GroupElement e = decode(bytes, &used);
  if (used != bytes.size()) throw DecodeError(used, "trailing bytes after element");
  return e;
}

Scalar BilinearGroup::scalar_from_bytes_mod(ByteSpan bytes) const {
  return Scalar(reduce_be_bytes(bytes, order()));
}

Scalar BilinearGroup::scalar_from_u64(uint64_t v) const {
  std::array<uint8_t, 8> be;
  BigInt<1>::from_u64(v).to_be_bytes(be);
  return scalar_from_bytes_mod(be);
}

bool BilinearGroup::is_valid_scalar(const Scalar& s) const {
  return s.value() < order();
}

Scalar BilinearGroup::decode_scalar(ByteSpan bytes, size_t base_offset) const {
  if (bytes.size() < Scalar::kEncodedSize) {
    throw DecodeError(base_offset + bytes.size(), "truncated scalar");
  }
  Scalar s(BigInt<4>::from_be_bytes(bytes.first(Scalar::kEncodedSize)));
  if (!is_valid_scalar(s)) throw DecodeError(base_offset, "scalar out of range");
  return s;
}

bool operator==(const BilinearGroup& a, const BilinearGroup& b) {
  return a.impl_ == b.impl_ ||
         (a.backend_id() == b.backend_id() && a.order() == b.order());
}

}  // namespace pcft::crypto
