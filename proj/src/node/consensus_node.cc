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

#include "pcft/node/consensus_node.h"

#include <algorithm>

#include "pcft/common/error.h"
#include "pcft/crypto/proof.h"
#include "pcft/crypto/sha256.h"

namespace pcft::node {

using protocol::Entry;
using protocol::Finish;
using protocol::Forward;
using protocol::Ping;
using protocol::Pong;
using protocol::Request;
using protocol::SetupPrime;
using protocol::Verify;
using protocol::ViewChange;
using protocol::ViewChangeAck;

void NodeConfig::validate() const {
  if (n < 3) throw Error(ErrorCode::kConfigError, "N must be at least 3");
  if (n % 2 == 0 && !allow_even_n) {
    throw Error(ErrorCode::kConfigError, "N must be odd (N = 2f + 1)");
  }
  if (node_index >= n) throw Error(ErrorCode::kConfigError, "node index out of range");
  if (forward_timeout_ms == 0 || viewchange_timeout_ms == 0) {
    throw Error(ErrorCode::kConfigError, "timeouts must be positive");
  }
}

Digest NodeSnapshot::hash() const {
  Bytes b;
  append_u32_be(b, index);
  append_u64_be(b, view);
  append_u64_be(b, height);
  append(b, tip_hash);
  append_u64_be(b, proposals);
  append_u64_be(b, votes);
  return crypto::sha256(b);
}

ConsensusNode::ConsensusNode(const NodeConfig& config, crypto::BilinearGroup group)
    : cfg_(config), group_(std::move(group)) {
  cfg_.validate();
}

NodeSnapshot ConsensusNode::snapshot() const {
  uint64_t votes = 0;
  for (const auto& [key, m] : tally_) votes += m.size();
  return NodeSnapshot{cfg_.node_index, view_, ledger_.height(), ledger_.tip().block_hash,
                      proposal_log_.size(), votes};
}

Effects ConsensusNode::on_message(const Address& from, const ConsensusMessage& msg) {
  Effects fx;
  if (const auto* m = std::get_if<SetupPrime>(&msg)) {
    on_setup_prime(*m, fx);
  } else if (const auto* m = std::get_if<Request>(&msg)) {
    on_request(from, *m, fx);
  } else if (const auto* m = std::get_if<Forward>(&msg)) {
    on_forward(from, *m, fx);
  } else if (const auto* m = std::get_if<Verify>(&msg)) {
    on_verify(from, *m, fx);
  } else if (const auto* m = std::get_if<ViewChange>(&msg)) {
    if (from.role == Role::kNode && m->i == from.index) {
      on_view_change_vote(m->v_new, m->i, false, fx);
    }
  } else if (const auto* m = std::get_if<ViewChangeAck>(&msg)) {
    if (from.role == Role::kNode && m->i == from.index) {
      on_view_change_vote(m->v_new, m->i, true, fx);
    }
  } else if (const auto* m = std::get_if<Ping>(&msg)) {
    fx.send(from, Pong{m->v, cfg_.node_index});
  } else if (const auto* m = std::get_if<Pong>(&msg)) {
    on_pong(*m);
  } else {
    fx.event({EventKind::kDroppedMessage, view_, {}, 0, {},
              std::string("unexpected ") + kind_name(kind_of(msg))});
  }
  return fx;
}

Effects ConsensusNode::on_timeout(uint64_t timer_id) {
  Effects fx;
  auto it = timers_.find(timer_id);
  if (it == timers_.end()) return fx;
  Timer t = it->second;
  timers_.erase(it);
  switch (t.kind) {
    case TimerKind::kRequest:
      if (t.view == view_ && !settled(t.id)) start_view_change("forward timeout", fx);
      break;
    case TimerKind::kProbe: {
      auto p = probes_.find(t.v_new);
      if (p == probes_.end()) break;
      bool answered = p->second.answered;
      probes_.erase(p);
      if (answered || view_ >= t.v_new || vc_sent_.contains(t.v_new)) break;
      vc_sent_.insert(t.v_new);
      vc_votes_[t.v_new].insert(cfg_.node_index);
      broadcast_to_others(ViewChangeAck{t.v_new, cfg_.node_index}, fx);
      fx.event({EventKind::kViewChangeAck, t.v_new, {}, 0, {}, "no pong from primary"});
      check_adopt(fx);
      break;
    }
  }
  return fx;
}

Effects ConsensusNode::force_view_change(const std::string& reason) {
  Effects fx;
  start_view_change(reason, fx);
  return fx;
}

void ConsensusNode::on_setup_prime(const SetupPrime& m, Effects& fx) {
  if (pk_table_.contains(m.id)) return;
  try {
    pk_table_.emplace(m.id, group_.decode_exact(m.pk));
  } catch (const DecodeError& e) {
    fx.event({EventKind::kDroppedMessage, view_, m.id, 0, {}, e.what()});
  }
}

void ConsensusNode::on_request(const Address& from, const Request& m, Effects& fx) {
  if (const protocol::Block* b = ledger_.find(m.id)) {
    // Already decided; repeat the reply.
    fx.send(Address::client(protocol::message_id_client(m.id)),
            Finish{m.id, b->view, b->block_hash});
    return;
  }
  if (rejected_.contains(m.id)) return;

  auto known = known_requests_.find(m.id);
  bool fresh = known == known_requests_.end();
  if (!fresh && (known->second.h != m.h || known->second.delta != m.delta)) {
    fx.event({EventKind::kEquivocation, view_, m.id, 0, {}, "conflicting REQUEST"});
    return;
  }
  if (fresh) {
    known_requests_.emplace(m.id, m);
    request_order_.push_back(m.id);
  }

  if (!is_primary()) {
    if (from.role == Role::kClient) {
      fx.send(Address::node(primary_of(view_)), m);
      if (fresh) arm_request_timer(m.id, fx);
    }
    return;
  }
  auto logged = proposal_log_.find({view_, m.id});
  if (logged != proposal_log_.end()) {
    if (logged->second.h != m.h || logged->second.delta != m.delta) {
      fx.event({EventKind::kEquivocation, view_, m.id, 0, {}, "conflicting REQUEST"});
    }
    return;
  }
  if (in_flight_ == m.id ||
      std::find(forward_queue_.begin(), forward_queue_.end(), m.id) != forward_queue_.end()) {
    return;
  }
  forward_queue_.push_back(m.id);
  pump(fx);
}

void ConsensusNode::pump(Effects& fx) {
  while (is_primary() && !in_flight_ && !forward_queue_.empty()) {
    MessageId id = forward_queue_.front();
    forward_queue_.pop_front();
    if (settled(id) || proposal_log_.contains({view_, id})) continue;
    // Prefer the tuple from the most recent earlier proposal.
    const Proposal* prior = nullptr;
    for (auto it = proposal_order_.rbegin(); it != proposal_order_.rend(); ++it) {
      if (it->second == id) {
        prior = &proposal_log_.at(*it);
        break;
      }
    }
    if (prior != nullptr) {
      Proposal p = *prior;
      propose(id, p.h, p.delta, fx);
    } else {
      const Request& r = known_requests_.at(id);
      propose(id, r.h, r.delta, fx);
    }
  }
}

void ConsensusNode::propose(const MessageId& id, const Digest& h, const Bytes& delta,
                            Effects& fx) {
  Key key{view_, id};
  // Checks the entry against the chain; the block itself is rebuilt on the
  // tip at commit time.
  protocol::build_block({Entry{id, h, delta}}, ledger_.tip(), view_, ledger_);
  log_proposal(key, h, delta);
  in_flight_ = id;
  broadcast_to_others(Forward{id, h, delta, view_}, fx);
  broadcast_verify(key, verify_proof(id, h, delta), fx);
}

void ConsensusNode::on_forward(const Address& from, const Forward& m, Effects& fx) {
  if (from.role != Role::kNode) {
    fx.event({EventKind::kDroppedMessage, m.v, m.id, 0, {}, "FORWARD from non-node"});
    return;
  }
  if (m.v < view_) {
    fx.event({EventKind::kStaleView, m.v, m.id, 0, {}, "FORWARD"});
    return;
  }
  if (m.v > view_) {
    future_forwards_[m.v].emplace_back(from.index, m);
    return;
  }
  if (from.index != primary_of(view_)) {
    fx.event({EventKind::kDroppedMessage, m.v, m.id, 0, {}, "FORWARD from non-primary"});
    return;
  }
  accept_forward(m, fx);
}

void ConsensusNode::accept_forward(const Forward& m, Effects& fx) {
  Key key{m.v, m.id};
  auto logged = proposal_log_.find(key);
  if (logged != proposal_log_.end()) {
    if (logged->second.h != m.h || logged->second.delta != m.delta) {
      fx.event({EventKind::kEquivocation, m.v, m.id, 0, {}, "conflicting FORWARD"});
      start_view_change("equivocation", fx);
    }
    return;
  }
  log_proposal(key, m.h, m.delta);
  broadcast_verify(key, verify_proof(m.id, m.h, m.delta), fx);
  if (!settled(m.id)) arm_request_timer(m.id, fx);
  try_commit(fx);
  check_rejection(key, fx);
}

bool ConsensusNode::verify_proof(const MessageId& id, const Digest& h,
                                 const Bytes& delta) const {
  auto pk = pk_table_.find(id);
  if (pk == pk_table_.end()) return false;
  try {
    crypto::Proof p{group_.decode_exact(delta), h};
    return crypto::proof_verify(p, pk->second, group_);
  } catch (const Error&) {
    return false;
  }
}

void ConsensusNode::log_proposal(const Key& key, const Digest& h, const Bytes& delta) {
  proposal_log_.emplace(key, Proposal{h, delta});
  proposal_order_.push_back(key);
  const MessageId& id = key.second;
  if (!settled(id) &&
      std::find(commit_queue_.begin(), commit_queue_.end(), id) == commit_queue_.end()) {
    commit_queue_.push_back(id);
  }
}

void ConsensusNode::broadcast_verify(const Key& key, bool r, Effects& fx) {
  const Proposal& p = proposal_log_.at(key);
  Verify v{key.second, p.h, p.delta, key.first, cfg_.node_index, r};
  for (NodeIndex j = 0; j < cfg_.n; ++j) fx.send(Address::node(j), v);
}

void ConsensusNode::on_verify(const Address& from, const Verify& m, Effects& fx) {
  if (from.role != Role::kNode || m.i != from.index || m.i >= cfg_.n) {
    fx.event({EventKind::kDroppedMessage, m.v, m.id, 0, {}, "VERIFY with bad sender"});
    return;
  }
  Key key{m.v, m.id};
  auto& gone = discarded_[key];
  if (gone.contains(m.i)) return;
  auto& votes = tally_[key];
  auto it = votes.find(m.i);
  if (it != votes.end()) {
    const Vote& old = it->second;
    if (old.h == m.h && old.delta == m.delta && old.r == m.r) return;
    votes.erase(it);
    gone.insert(m.i);
    fx.event({EventKind::kInconsistentVerify, m.v, m.id, 0, {},
              "node " + std::to_string(m.i)});
    return;
  }
  votes.emplace(m.i, Vote{m.h, m.delta, m.r});
  try_commit(fx);
  check_rejection(key, fx);
}

void ConsensusNode::try_commit(Effects& fx) {
  while (!commit_queue_.empty()) {
    MessageId id = commit_queue_.front();
    if (settled(id)) {
      commit_queue_.pop_front();
      continue;
    }
    std::optional<Key> ready;
    for (const Key& key : proposal_order_) {
      if (key.second != id) continue;
      const Proposal& p = proposal_log_.at(key);
      auto t = tally_.find(key);
      if (t == tally_.end()) continue;
      uint32_t yes = 0;
      for (const auto& [i, vote] : t->second) {
        if (vote.r && vote.h == p.h && vote.delta == p.delta) ++yes;
      }
      if (yes >= quorum()) {
        ready = key;
        break;
      }
    }
    if (!ready) return;
    const Proposal& p = proposal_log_.at(*ready);
    protocol::Block b =
        protocol::build_block({Entry{id, p.h, p.delta}}, ledger_.tip(), ready->first, ledger_);
    ledger_.append(b);
    commit_queue_.pop_front();
    fx.event({EventKind::kCommit, b.view, id, b.height, b.block_hash, ""});
    fx.send(Address::client(protocol::message_id_client(id)),
            Finish{id, b.view, b.block_hash});
    resolved(id, fx);
  }
}

void ConsensusNode::check_rejection(const Key& key, Effects& fx) {
  const MessageId& id = key.second;
  if (key.first != view_ || settled(id)) return;
  auto p = proposal_log_.find(key);
  auto t = tally_.find(key);
  if (p == proposal_log_.end() || t == tally_.end()) return;
  uint32_t no = 0;
  for (const auto& [i, vote] : t->second) {
    if (!(vote.r && vote.h == p->second.h && vote.delta == p->second.delta)) ++no;
  }
  if (no < cfg_.n - quorum() + 1) return;
  rejected_.insert(id);
  commit_queue_.erase(std::remove(commit_queue_.begin(), commit_queue_.end(), id),
                      commit_queue_.end());
  fx.event({EventKind::kRejected, key.first, id, 0, {}, ""});
  resolved(id, fx);
  try_commit(fx);
}

void ConsensusNode::resolved(const MessageId& id, Effects& fx) {
  if (in_flight_ == id) in_flight_.reset();
  pump(fx);
}

void ConsensusNode::start_view_change(const std::string& reason, Effects& fx) {
  View v_new = view_ + 1;
  if (vc_sent_.contains(v_new)) return;
  vc_sent_.insert(v_new);
  vc_votes_[v_new].insert(cfg_.node_index);
  broadcast_to_others(ViewChange{v_new, cfg_.node_index}, fx);
  fx.event({EventKind::kViewChangeStarted, v_new, {}, 0, {}, reason});
  check_adopt(fx);
}

void ConsensusNode::on_view_change_vote(View v_new, NodeIndex from, bool ack, Effects& fx) {
  if (v_new <= view_) {
    fx.event({EventKind::kDroppedMessage, v_new, {}, 0, {},
              ack ? "stale VIEWCHANGE_ACK" : "stale VIEWCHANGE"});
    return;
  }
  vc_votes_[v_new].insert(from);
  check_adopt(fx);
  if (view_ >= v_new || vc_sent_.contains(v_new) || probes_.contains(v_new)) return;
  // The primary knows it is alive and never confirms its own removal.
  if (is_primary()) return;
  probes_[v_new] = Probe{view_, false};
  fx.send(Address::node(primary_of(view_)), Ping{view_, cfg_.node_index});
  Timer t{TimerKind::kProbe, view_, {}, v_new};
  add_timer(t, cfg_.viewchange_timeout_ms, fx);
}

void ConsensusNode::on_pong(const Pong& m) {
  if (m.i != primary_of(m.v)) return;
  for (auto& [v_new, probe] : probes_) {
    if (probe.probed_view == m.v) probe.answered = true;
  }
}

void ConsensusNode::check_adopt(Effects& fx) {
  std::optional<View> best;
  for (const auto& [v, voters] : vc_votes_) {
    if (v > view_ && voters.size() >= quorum()) best = v;
  }
  if (best) adopt(*best, fx);
}

void ConsensusNode::adopt(View v, Effects& fx) {
  view_ = v;
  fx.event({EventKind::kViewAdopted, v, {}, 0, {},
            "primary " + std::to_string(primary_of(v))});
  in_flight_.reset();
  forward_queue_.clear();
  std::erase_if(vc_votes_, [v](const auto& e) { return e.first <= v; });
  std::erase_if(probes_, [v](const auto& e) { return e.first <= v; });
  std::erase_if(vc_sent_, [v](View x) { return x <= v; });
  std::vector<std::pair<NodeIndex, Forward>> buffered;
  if (auto it = future_forwards_.find(v); it != future_forwards_.end()) {
    buffered = std::move(it->second);
  }
  std::erase_if(future_forwards_, [v](const auto& e) { return e.first <= v; });

  std::vector<MessageId> open;
  auto add = [&](const MessageId& id) {
    if (!settled(id) && std::find(open.begin(), open.end(), id) == open.end()) {
      open.push_back(id);
    }
  };
  for (const Key& key : proposal_order_) add(key.second);
  for (const MessageId& id : request_order_) add(id);

  if (is_primary()) {
    forward_queue_.assign(open.begin(), open.end());
    pump(fx);
  } else {
    for (const MessageId& id : open) arm_request_timer(id, fx);
  }
  // FIFO links carry a primary's FORWARDs in order, so replaying them in
  // arrival order keeps the proposal order.
  for (const auto& [sender, f] : buffered) {
    if (sender == primary_of(v)) accept_forward(f, fx);
  }
}

void ConsensusNode::arm_request_timer(const MessageId& id, Effects& fx) {
  add_timer(Timer{TimerKind::kRequest, view_, id, 0}, cfg_.forward_timeout_ms, fx);
}

uint64_t ConsensusNode::add_timer(Timer t, uint64_t delay, Effects& fx) {
  uint64_t id = next_timer_++;
  timers_.emplace(id, t);
  fx.timers.push_back({id, delay});
  return id;
}

void ConsensusNode::broadcast_to_others(const ConsensusMessage& m, Effects& fx) const {
  for (NodeIndex j = 0; j < cfg_.n; ++j) {
    if (j != cfg_.node_index) fx.send(Address::node(j), m);
  }
}

}  // namespace pcft::node
