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

#include <gtest/gtest.h>

#include <string>
#include <string_view>

#include "pcft/crypto/bls12_381/hash_to_curve.h"
#include "support/gmp_oracle.h"

namespace pcft::crypto::bls12_381 {
namespace {

std::string repeat(std::string_view prefix, char c, size_t n) {
  return std::string(prefix) + std::string(n, c);
}

struct XmdVector {
  std::string msg;
  std::string_view dst;
  size_t len;
  std::string_view expected;
};

// RFC 9380 appendix K.1 (expand_message_xmd, SHA-256).
const XmdVector kXmdVectors[] = {
    {"asdf", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_", 128,
     "ecc25edef8f6b277e27a88cf5ca0cdd4c4a49e8ba273d6069a4f0c9db05d37b7"
     "8e700a875f4bb5972bfce49a867172ec1cb8c5524b1853994bb8af52a8ad2338"
     "d2cf688cf788b732372c10013445cd2c16a08a462028ae8ffff3082c8e47e843"
     "7dee5a58801e03ee8320980ae7c071ab022473231789d543d56defe9ff53bdba"},
    {"", "QUUX-V01-CS02-with-expander", 32,
     "f659819a6473c1835b25ea59e3d38914c98b374f0970b7e4c92181df928fca88"},
    {"abc", "QUUX-V01-CS02-with-expander", 32,
     "1c38f7c211ef233367b2420d04798fa4698080a8901021a795a1151775fe4da7"},
    {"abcdef0123456789", "QUUX-V01-CS02-with-expander", 32,
     "8f7e7b66791f0da0dbb5ec7c22ec637f79758c0a48170bfb7c4611bd304ece89"},
    {repeat("q128_", 'q', 128), "QUUX-V01-CS02-with-expander", 32,
     "72d5aa5ec810370d1f0013c0df2f1d65699494ee2a39f72e1716b1b964e1c642"},
    {"", "QUUX-V01-CS02-with-expander", 128,
     "8bcffd1a3cae24cf9cd7ab85628fd111bb17e3739d3b53f89580d217aa79526f"
     "1708354a76a402d3569d6a9d19ef3de4d0b991e4f54b9f20dcde9b95a66824cb"
     "df6c1a963a1913d43fd7ac443a02fc5d9d8d77e2071b86ab114a9f34150954a7"
     "531da568a1ea8c760861c0cde2005afc2c114042ee7b5848f5303f0611cf297f"},
    {"abc", "QUUX-V01-CS02-with-expander", 128,
     "fe994ec51bdaa821598047b3121c149b364b178606d5e72bfbb713933acc29c1"
     "86f316baecf7ea22212f2496ef3f785a27e84a40d8b299cec56032763eceeff4"
     "c61bd1fe65ed81decafff4a31d0198619c0aa0c6c51fca15520789925e813dcf"
     "d318b542f8799441271f4db9ee3b8092a7a2e8d5b75b73e28fb1ab6b4573c192"},
    {"abcdef0123456789", "QUUX-V01-CS02-with-expander", 128,
     "c9ec7941811b1e19ce98e21db28d22259354d4d0643e301175e2f474e030d326"
     "94e9dd5520dde93f3600d8edad94e5c364903088a7228cc9eff685d7eaac50d5"
     "a5a8229d083b51de4ccc3733917f4b9535a819b445814890b7029b5de805bf62"
     "b33a4dc7e24acdf2c924e9fe50d55a6b832c8c84c7f82474b34e48c6d43867be"},
    {repeat("q128_", 'q', 128), "QUUX-V01-CS02-with-expander", 128,
     "48e256ddba722053ba462b2b93351fc966026e6d6db493189798181c5f3feea3"
     "77b5a6f1d8368d7453faef715f9aecb078cd402cbd548c0e179c4ed1e4c7e5b0"
     "48e0a39d31817b5b24f50db58bb3720fe96ba53db947842120a068816ac05c15"
     "9bb5266c63658b4f000cbf87b1209a225def8ef1dca917bcda79a1e42acd8069"},
    {repeat("a512_", 'a', 512), "QUUX-V01-CS02-with-expander", 128,
     "396962db47f749ec3b5042ce2452b619607f27fd3939ece2746a7614fb83a1d0"
     "97f554df3927b084e55de92c7871430d6b95c2a13896d8a33bc48587b1f66d21"
     "b128a1a8240d5b0c26dfe795a1a842a0807bb148b77c2ef82ed4b6c9f7fcb732"
     "e7f94466c8b51e52bf378fba044a31f5cb44583a892f5969dcd73b3fa128816e"},
};

TEST(HashToCurveTest, ExpandMessageXmdVectors) {
  for (const XmdVector& v : kXmdVectors) {
    Bytes out = expand_message_xmd(as_span(v.msg), as_span(v.dst), v.len);
    EXPECT_EQ(to_hex(out), v.expected) << v.msg << " / " << v.len;
  }
}

struct SswuVector {
  std::string_view u, xn, xd, y;
};

// Decimal; x = xn / xd on the isogenous curve.
const SswuVector kSswuVectors[] = {
    {"0",
     "2906670324641927570491258158026293881577086121416628140204402091718288198173574630967936031029026176254968826637280",
     "134093699507829814821517650980559345626771735832728306571853989028117161444712301203928819168120125800913069360447",
     "883926319761702754759909536142450234040420493353017578303105057331414514426056372828799438842649753623273850162620"},
    {"1",
     "1899737305729263819017890260937734483867440857300594896394519620134021106669873067956151260450660652775675911846846",
     "2393285161127709615559578013969192009035621989946268206469810267786625713154290249995541799111574154426937440234423",
     "930707443353688021592152842018127582116075842630002779852379799673382026358889394936840703051493045692645732041175"},
    {"2445954111132780748727614926881625117054159133000189976501123519233969822355358926084559381412726536178576396564099",
     "1380948948858039589493865757655255282539355225819860723137103295095584615993188368169864518071716731687572756871254",
     "3943815976847699234459109633672806041428347164453405394564656059649800794974863796342327007702642595444543195342842",
     "2822129059347872230939996033946474192520362213555773694753196763199812747558444338256205967106315253391997542043187"},
};

TEST(HashToCurveTest, SimplifiedSwuVectors) {
  for (const SswuVector& v : kSswuVectors) {
    Fp u = ::pcft::testing::fp_from_mpz(mpz_class(std::string(v.u)));
    G1Affine q = map_to_isogenous_curve(u);
    Fp xn = ::pcft::testing::fp_from_mpz(mpz_class(std::string(v.xn)));
    Fp xd = ::pcft::testing::fp_from_mpz(mpz_class(std::string(v.xd)));
    Fp y = ::pcft::testing::fp_from_mpz(mpz_class(std::string(v.y)));
    EXPECT_EQ(q.x, xn * xd.inverse()) << v.u;
    EXPECT_EQ(q.y, y) << v.u;
  }
}

struct G1Vector {
  std::string msg;
  std::string_view dst, x, y;
};

// RFC 9380 appendix J.9.1, plus one vector with a signature-suite DST.
const G1Vector kG1Vectors[] = {
    {"asdf", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_",
     "a72df17570d0eb81260042edbea415ad49bdb94a1bc1ce9d1bf147d0d48268170764bb513a3b994d662e1faba137106",
     "122b77eca1ed58795b7cd456576362f4f7bd7a572a29334b4817898a42414d31e9c0267f2dc481a4daf8bcf4a460322"},
    {"", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_",
     "052926add2207b76ca4fa57a8734416c8dc95e24501772c814278700eed6d1e4e8cf62d9c09db0fac349612b759e79a1",
     "08ba738453bfed09cb546dbb0783dbb3a5f1f566ed67bb6be0e8c67e2e81a4cc68ee29813bb7994998f3eae0c9c6a265"},
    {"abc", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_",
     "03567bc5ef9c690c2ab2ecdf6a96ef1c139cc0b2f284dca0a9a7943388a49a3aee664ba5379a7655d3c68900be2f6903",
     "0b9c15f3fe6e5cf4211f346271d7b01c8f3b28be689c8429c85b67af215533311f0b8dfaaa154fa6b88176c229f2885d"},
    {"abcdef0123456789", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_",
     "11e0b079dea29a68f0383ee94fed1b940995272407e3bb916bbf268c263ddd57a6a27200a784cbc248e84f357ce82d98",
     "03a87ae2caf14e8ee52e51fa2ed8eefe80f02457004ba4d486d6aa1f517c0889501dc7413753f9599b099ebcbbd2d709"},
    {repeat("q128_", 'q', 128), "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_",
     "15f68eaa693b95ccb85215dc65fa81038d69629f70aeee0d0f677cf22285e7bf58d7cb86eefe8f2e9bc3f8cb84fac488",
     "1807a1d50c29f430b8cafc4f8638dfeeadf51211e1602a5f184443076715f91bb90a48ba1e370edce6ae1062f5e6dd38"},
    {repeat("a512_", 'a', 512), "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_",
     "082aabae8b7dedb0e78aeb619ad3bfd9277a2f77ba7fad20ef6aabdc6c31d19ba5a6d12283553294c1825c4b3ca2dcfe",
     "05b84ae5a942248eea39e1d91030458c40153f3b654ab7872d779ad1e942856a20c438e8d99bc8abfbf74729ce1f7ac8"},
};

TEST(HashToCurveTest, HashToG1Vectors) {
  for (const G1Vector& v : kG1Vectors) {
    G1Affine p = hash_to_g1(as_span(v.msg), as_span(v.dst)).to_affine();
    ASSERT_FALSE(p.infinity);
    EXPECT_EQ(p.x, Fp::from_hex(v.x)) << v.msg;
    EXPECT_EQ(p.y, Fp::from_hex(v.y)) << v.msg;
  }
}

TEST(HashToCurveTest, OutputIsInSubgroup) {
  for (int i = 0; i < 10; ++i) {
    std::string msg = "message-" + std::to_string(i);
    G1 p = hash_to_g1(as_span(msg), as_span(kProtocolDst));
    EXPECT_TRUE(G1::on_curve(p.to_affine()));
    EXPECT_TRUE(p.in_subgroup());
  }
}

TEST(HashToCurveTest, IsoMapLandsOnCurve) {
  for (uint64_t u = 0; u < 10; ++u) {
    G1Affine q = iso_map(map_to_isogenous_curve(Fp::from_u64(u)));
    EXPECT_TRUE(G1::on_curve(q));
  }
}

}  // namespace
}  // namespace pcft::crypto::bls12_381
