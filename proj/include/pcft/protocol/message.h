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

// Consensus messages and their canonical wire format.
//
// Wire format: a one-byte kind tag followed by the fields in declaration
// order. Integers are big-endian (views u64, node indices u32), booleans are
// one byte (0 or 1), identifiers and digests are fixed width, and encoded
// group elements carry a u32 length prefix.

#ifndef PCFT_PROTOCOL_MESSAGE_H_
#define PCFT_PROTOCOL_MESSAGE_H_

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "pcft/common/bytes.h"

namespace pcft::protocol {

// 16 bytes: client index (u32) || per-client sequence number (u64) || 4 zero
// bytes.
using MessageId = std::array<uint8_t, 16>;

MessageId make_message_id(uint32_t client, uint64_t seq);
uint32_t message_id_client(const MessageId& id);
std::string message_id_hex(const MessageId& id);

using View = uint64_t;
using NodeIndex = uint32_t;

// CA -> client: the secret key for one identifier.
struct Setup {
  MessageId id;
  std::array<uint8_t, 32> sk;
  friend bool operator==(const Setup&, const Setup&) = default;
};

// CA -> consensus node: the matching public key.
struct SetupPrime {
  MessageId id;
  Bytes pk;
  friend bool operator==(const SetupPrime&, const SetupPrime&) = default;
};

struct Request {
  MessageId id;
  Digest h;
  Bytes delta;
  friend bool operator==(const Request&, const Request&) = default;
};

struct Forward {
  MessageId id;
  Digest h;
  Bytes delta;
  View v;
  friend bool operator==(const Forward&, const Forward&) = default;
};

struct Verify {
  MessageId id;
  Digest h;
  Bytes delta;
  View v;
  NodeIndex i;
  bool r;
  friend bool operator==(const Verify&, const Verify&) = default;
};

struct Finish {
  MessageId id;
  View v;
  Digest block_hash;
  friend bool operator==(const Finish&, const Finish&) = default;
};

struct ViewChange {
  View v_new;
  NodeIndex i;
  friend bool operator==(const ViewChange&, const ViewChange&) = default;
};

struct ViewChangeAck {
  View v_new;
  NodeIndex i;
  friend bool operator==(const ViewChangeAck&, const ViewChangeAck&) = default;
};

// Liveness probe of the primary of view v, sent by node i.
struct Ping {
  View v;
  NodeIndex i;
  friend bool operator==(const Ping&, const Ping&) = default;
};

struct Pong {
  View v;
  NodeIndex i;
  friend bool operator==(const Pong&, const Pong&) = default;
};

using ConsensusMessage =
    std::variant<Setup, SetupPrime, Request, Forward, Verify, Finish,
                 ViewChange, ViewChangeAck, Ping, Pong>;

enum class MessageKind : uint8_t {
  kSetup = 1,
  kSetupPrime = 2,
  kRequest = 3,
  kForward = 4,
  kVerify = 5,
  kFinish = 6,
  kViewChange = 7,
  kViewChangeAck = 8,
  kPing = 9,
  kPong = 10,
};

inline constexpr MessageKind kAllKinds[] = {
    MessageKind::kSetup,      MessageKind::kSetupPrime,
    MessageKind::kRequest,    MessageKind::kForward,
    MessageKind::kVerify,     MessageKind::kFinish,
    MessageKind::kViewChange, MessageKind::kViewChangeAck,
    MessageKind::kPing,       MessageKind::kPong};

MessageKind kind_of(const ConsensusMessage& msg);
// Upper-case names: "SETUP", "SETUP_PRIME", "REQUEST", ...
const char* kind_name(MessageKind kind);
// Throws Error(kParseError) for an unknown name.
MessageKind kind_from_name(std::string_view name);

// Ping and Pong are liveness plumbing, everything else is protocol traffic.
bool is_consensus_kind(MessageKind kind);

Bytes encode(const ConsensusMessage& msg);
// Throws DecodeError with the offset of the first bad byte. Trailing bytes
// are rejected.
ConsensusMessage decode(ByteSpan bytes);

}  // namespace pcft::protocol

#endif  // PCFT_PROTOCOL_MESSAGE_H_
