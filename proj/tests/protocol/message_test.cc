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

#include "pcft/protocol/message.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pcft/common/error.h"
#include "pcft/crypto/proof.h"
#include "pcft/protocol/trace_json.h"

namespace pcft::protocol {
namespace {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  template <size_t N>
  std::array<uint8_t, N> arr() {
    std::array<uint8_t, N> a;
    for (auto& b : a) b = static_cast<uint8_t>(rng_());
    return a;
  }
  Bytes bytes() {
    Bytes b(rng_() % 120);
    for (auto& x : b) x = static_cast<uint8_t>(rng_());
    return b;
  }
  uint64_t u64() {
    // Mix small and full-width values.
    return rng_() % 2 ? rng_() % 16 : rng_();
  }
  uint32_t u32() { return static_cast<uint32_t>(u64()); }
  bool flag() { return rng_() % 2; }

  ConsensusMessage message(MessageKind k) {
    switch (k) {
      case MessageKind::kSetup: return Setup{arr<16>(), arr<32>()};
      case MessageKind::kSetupPrime: return SetupPrime{arr<16>(), bytes()};
      case MessageKind::kRequest: return Request{arr<16>(), arr<32>(), bytes()};
      case MessageKind::kForward:
        return Forward{arr<16>(), arr<32>(), bytes(), u64()};
      case MessageKind::kVerify:
        return Verify{arr<16>(), arr<32>(), bytes(), u64(), u32(), flag()};
      case MessageKind::kFinish: return Finish{arr<16>(), u64(), arr<32>()};
      case MessageKind::kViewChange: return ViewChange{u64(), u32()};
      case MessageKind::kViewChangeAck: return ViewChangeAck{u64(), u32()};
      case MessageKind::kPing: return Ping{u64(), u32()};
      case MessageKind::kPong: return Pong{u64(), u32()};
    }
    return Ping{};
  }

  ConsensusMessage any() { return message(kAllKinds[rng_() % std::size(kAllKinds)]); }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

TEST(MessageTest, RoundTripEveryKind) {
  Gen gen(1);
  for (MessageKind k : kAllKinds) {
    for (int n = 0; n < 1000; ++n) {
      ConsensusMessage m = gen.message(k);
      Bytes b = encode(m);
      EXPECT_EQ(b[0], static_cast<uint8_t>(k));
      ConsensusMessage back = decode(b);
      ASSERT_EQ(back, m) << kind_name(k);
      EXPECT_EQ(kind_of(back), k);
    }
  }
}

TEST(MessageTest, EqualMessagesEncodeIdentically) {
  Gen a(7), b(7);
  for (int n = 0; n < 200; ++n) {
    ConsensusMessage x = a.any();
    ConsensusMessage y = b.any();
    ASSERT_EQ(x, y);
    EXPECT_EQ(encode(x), encode(y));
  }
}

TEST(MessageTest, KnownEncoding) {
  Verify v{make_message_id(2, 5), Digest{}, Bytes{0x21, 0, 0, 0, 7}, 3, 1, true};
  Bytes b = encode(v);
  std::string hex = to_hex(b);
  EXPECT_EQ(hex,
            "05"
            "00000002" "0000000000000005" "00000000" +
            std::string(64, '0') +
            "00000005" "2100000007"
            "0000000000000003"
            "00000001"
            "01");
  EXPECT_EQ(encode(ViewChange{1, 4}), from_hex("07000000000000000100000004"));
}

TEST(MessageTest, EveryTruncationFails) {
  Gen gen(2);
  for (MessageKind k : kAllKinds) {
    Bytes b = encode(gen.message(k));
    for (size_t len = 0; len < b.size(); ++len) {
      EXPECT_THROW(decode(ByteSpan(b.data(), len)), DecodeError)
          << kind_name(k) << " len " << len;
    }
  }
}

TEST(MessageTest, TrailingBytesRejected) {
  Bytes b = encode(Ping{1, 2});
  b.push_back(0);
  try {
    decode(b);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), b.size() - 1);
  }
}

TEST(MessageTest, MalformedFields) {
  EXPECT_THROW(decode(from_hex("00")), DecodeError);
  EXPECT_THROW(decode(from_hex("0b")), DecodeError);
  Bytes b = encode(Verify{make_message_id(0, 0), Digest{}, Bytes{}, 0, 0, false});
  b.back() = 2;
  try {
    decode(b);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), b.size() - 1);
  }
  // Length prefix larger than the rest of the input.
  Bytes r = encode(Request{make_message_id(0, 0), Digest{}, Bytes{1, 2, 3}});
  r[1 + 16 + 32 + 3] = 9;
  EXPECT_THROW(decode(r), DecodeError);
}

// A flipped bit either fails to decode or yields a message whose canonical
// encoding is exactly the mutated bytes.
TEST(MessageTest, BitFlipMutations) {
  Gen gen(3);
  int rejected = 0;
  for (int n = 0; n < 1000; ++n) {
    Bytes b = encode(gen.any());
    size_t bit = gen.rng()() % (b.size() * 8);
    Bytes mutated = b;
    mutated[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    try {
      ConsensusMessage m = decode(mutated);
      EXPECT_EQ(encode(m), mutated);
      EXPECT_NE(encode(m), b);
    } catch (const DecodeError&) {
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(MessageTest, MessageIdLayout) {
  MessageId id = make_message_id(0x01020304, 0x0a0b0c0d0e0f1011ULL);
  EXPECT_EQ(message_id_hex(id), "010203040a0b0c0d0e0f101100000000");
  EXPECT_EQ(message_id_client(id), 0x01020304u);
}

TEST(MessageTest, NoPlaintextOnTheWire) {
  const std::string plaintext = "transfer 40 units from alice to bob #8812";
  auto group = crypto::BilinearGroup::toy_exponent();
  std::array<uint8_t, 32> seed{};
  seed[0] = 0x5c;
  crypto::KeyPair kp = crypto::key_gen(group, seed);
  crypto::Proof p = crypto::proof_gen(as_span(plaintext), kp.sk, group);
  Bytes delta = group.encode(p.delta);
  MessageId id = make_message_id(0, 1);
  std::vector<ConsensusMessage> msgs = {
      Request{id, p.digest, delta},
      Forward{id, p.digest, delta, 0},
      Verify{id, p.digest, delta, 0, 2, true},
      Finish{id, 0, Digest{}},
  };
  for (const auto& m : msgs) {
    Bytes b = encode(m);
    auto hit = std::search(b.begin(), b.end(), plaintext.begin(), plaintext.end());
    EXPECT_EQ(hit, b.end()) << kind_name(kind_of(m));
    std::string json = message_to_json(m).dump();
    EXPECT_EQ(json.find(plaintext), std::string::npos);
    EXPECT_EQ(json.find(to_hex(as_span(plaintext))), std::string::npos);
  }
}

TEST(TraceJsonTest, RoundTrip) {
  Gen gen(4);
  for (int n = 0; n < 500; ++n) {
    ConsensusMessage m = gen.any();
    auto j = message_to_json(m);
    EXPECT_EQ(j["kind"], kind_name(kind_of(m)));
    EXPECT_EQ(message_from_json(nlohmann::ordered_json::parse(j.dump())), m);
  }
}

TEST(TraceJsonTest, FieldOrderIsStable) {
  auto j = message_to_json(Verify{make_message_id(1, 2), Digest{}, Bytes{0xab}, 3, 4, false});
  std::string s = j.dump();
  EXPECT_LT(s.find("\"id\""), s.find("\"h\""));
  EXPECT_LT(s.find("\"h\""), s.find("\"delta\""));
  EXPECT_LT(s.find("\"v\""), s.find("\"i\""));
  EXPECT_LT(s.find("\"i\""), s.find("\"r\""));
}

TEST(TraceJsonTest, RejectsBadRecords) {
  using nlohmann::ordered_json;
  auto parse_err = [](const char* text) {
    try {
      message_from_json(ordered_json::parse(text));
    } catch (const Error& e) {
      return e.code() == ErrorCode::kParseError;
    }
    return false;
  };
  EXPECT_TRUE(parse_err(R"({"kind":"NOPE"})"));
  EXPECT_TRUE(parse_err(R"({"kind":"VIEWCHANGE","v_new":1})"));
  EXPECT_TRUE(parse_err(R"({"kind":"VIEWCHANGE","v_new":-1,"i":0})"));
  EXPECT_TRUE(parse_err(R"({"kind":"PING","v":0,"i":4294967296})"));
  EXPECT_TRUE(parse_err(R"({"kind":"FINISH","id":"00","v":0,"block_hash":"00"})"));
  EXPECT_TRUE(parse_err(R"({"kind":"REQUEST","id":"zz"})"));
  EXPECT_TRUE(parse_err(R"([1,2])"));
}

}  // namespace
}  // namespace pcft::protocol
