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

#ifndef PCFT_NODE_CLIENT_H_
#define PCFT_NODE_CLIENT_H_

#include <map>
#include <set>

#include "pcft/crypto/bilinear_group.h"
#include "pcft/node/effects.h"

namespace pcft::node {

struct ClientConfig {
  uint32_t client_index = 0;
  uint32_t n = 3;
  // If a request is not complete after this long it is re-sent to every
  // node.
  uint64_t retransmit_ms = 200;
};

class Client {
 public:
  Client(const ClientConfig& config, crypto::BilinearGroup group);

  // Consumes SETUP and FINISH.
  Effects on_message(const Address& from, const ConsensusMessage& msg);
  Effects on_timeout(uint64_t timer_id);

  // Builds REQUEST{id, SHA256(m), proof_gen(m, sk)}, sends it to the node the
  // client believes is primary and records it as outstanding. Throws
  // Error(kNoKey) or Error(kDuplicateRequest).
  protocol::Request request(ByteSpan m, const MessageId& id, Effects& fx);

  bool has_key(const MessageId& id) const { return keys_.contains(id); }
  bool is_outstanding(const MessageId& id) const { return outstanding_.contains(id); }
  bool is_complete(const MessageId& id) const;
  size_t finish_count(const MessageId& id) const;
  size_t completed() const;
  uint32_t quorum() const { return quorum_size(cfg_.n); }

 private:
  struct Outstanding {
    protocol::Request req;
    std::set<NodeIndex> replies;
    bool complete = false;
  };

  ClientConfig cfg_;
  crypto::BilinearGroup group_;
  View view_hint_ = 0;
  std::map<MessageId, crypto::Scalar> keys_;
  std::map<MessageId, Outstanding> outstanding_;
  std::map<uint64_t, MessageId> timers_;
  uint64_t next_timer_ = 1;
};

}  // namespace pcft::node

#endif  // PCFT_NODE_CLIENT_H_
