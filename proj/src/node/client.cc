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

#include "pcft/node/client.h"

#include "pcft/common/error.h"
#include "pcft/crypto/proof.h"

namespace pcft::node {

Client::Client(const ClientConfig& config, crypto::BilinearGroup group)
    : cfg_(config), group_(std::move(group)) {}

bool Client::is_complete(const MessageId& id) const {
  auto it = outstanding_.find(id);
  return it != outstanding_.end() && it->second.complete;
}

size_t Client::finish_count(const MessageId& id) const {
  auto it = outstanding_.find(id);
  return it == outstanding_.end() ? 0 : it->second.replies.size();
}

size_t Client::completed() const {
  size_t n = 0;
  for (const auto& [id, o] : outstanding_) n += o.complete;
  return n;
}

protocol::Request Client::request(ByteSpan m, const MessageId& id, Effects& fx) {
  auto key = keys_.find(id);
  if (key == keys_.end()) throw Error(ErrorCode::kNoKey, protocol::message_id_hex(id));
  if (outstanding_.contains(id)) {
    throw Error(ErrorCode::kDuplicateRequest, protocol::message_id_hex(id));
  }
  crypto::Proof p = crypto::proof_gen(m, key->second, group_);
  protocol::Request req{id, p.digest, group_.encode(p.delta)};
  outstanding_.emplace(id, Outstanding{req, {}, false});
  fx.send(Address::node(static_cast<uint32_t>(view_hint_ % cfg_.n)), req);
  uint64_t t = next_timer_++;
  timers_.emplace(t, id);
  fx.timers.push_back({t, cfg_.retransmit_ms});
  return req;
}

Effects Client::on_message(const Address& from, const ConsensusMessage& msg) {
  Effects fx;
  if (const auto* s = std::get_if<protocol::Setup>(&msg)) {
    try {
      keys_.emplace(s->id, group_.decode_scalar(s->sk));
    } catch (const DecodeError& e) {
      fx.event({EventKind::kDroppedMessage, 0, s->id, 0, {}, e.what()});
    }
    return fx;
  }
  const auto* f = std::get_if<protocol::Finish>(&msg);
  if (f == nullptr || from.role != Role::kNode) {
    fx.event({EventKind::kDroppedMessage, 0, {}, 0, {},
              std::string("unexpected ") + kind_name(kind_of(msg))});
    return fx;
  }
  auto it = outstanding_.find(f->id);
  if (it == outstanding_.end()) {
    fx.event({EventKind::kUnknownId, f->v, f->id, 0, {}, "FINISH"});
    return fx;
  }
  view_hint_ = std::max(view_hint_, f->v);
  Outstanding& o = it->second;
  o.replies.insert(from.index);
  if (!o.complete && o.replies.size() >= quorum()) {
    o.complete = true;
    fx.event({EventKind::kRequestComplete, f->v, f->id, 0, f->block_hash, ""});
  }
  return fx;
}

Effects Client::on_timeout(uint64_t timer_id) {
  Effects fx;
  auto it = timers_.find(timer_id);
  if (it == timers_.end()) return fx;
  MessageId id = it->second;
  timers_.erase(it);
  const Outstanding& o = outstanding_.at(id);
  if (o.complete) return fx;
  for (uint32_t j = 0; j < cfg_.n; ++j) fx.send(Address::node(j), o.req);
  return fx;
}

}  // namespace pcft::node
