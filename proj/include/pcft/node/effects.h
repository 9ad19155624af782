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

// What a state machine asks its environment to do after handling one input.

#ifndef PCFT_NODE_EFFECTS_H_
#define PCFT_NODE_EFFECTS_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pcft/protocol/message.h"

namespace pcft::node {

using protocol::ConsensusMessage;
using protocol::MessageId;
using protocol::NodeIndex;
using protocol::View;

enum class Role : uint8_t { kNode, kClient, kCa };

struct Address {
  Role role = Role::kNode;
  uint32_t index = 0;

  static Address node(uint32_t i) { return {Role::kNode, i}; }
  static Address client(uint32_t i) { return {Role::kClient, i}; }
  static Address ca() { return {Role::kCa, 0}; }

  friend auto operator<=>(const Address&, const Address&) = default;
};

// "node:3", "client:0", "ca".
std::string address_name(const Address& a);

struct Send {
  Address to;
  ConsensusMessage msg;
};

struct TimerRequest {
  uint64_t timer_id;
  uint64_t delay_ms;
};

enum class EventKind : uint8_t {
  kCommit,
  kRejected,
  kStaleView,
  kInconsistentVerify,
  kEquivocation,
  kViewChangeStarted,
  kViewChangeAck,
  kViewAdopted,
  kDroppedMessage,
  kRequestComplete,
  kUnknownId,
};

const char* event_kind_name(EventKind k);

struct NodeEvent {
  EventKind kind;
  View view = 0;
  MessageId id{};
  uint64_t height = 0;
  Digest block_hash{};
  std::string detail;
};

struct Effects {
  std::vector<Send> sends;
  std::vector<TimerRequest> timers;
  std::vector<NodeEvent> events;

  void send(Address to, ConsensusMessage m) { sends.push_back({to, std::move(m)}); }
  void event(NodeEvent e) { events.push_back(std::move(e)); }
};

// floor(N/2) + 1; equals (N-1)/2 + 1 for odd N.
inline uint32_t quorum_size(uint32_t n) { return n / 2 + 1; }

}  // namespace pcft::node

#endif  // PCFT_NODE_EFFECTS_H_
