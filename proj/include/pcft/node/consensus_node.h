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

// One consensus node. Single-threaded: the environment feeds it one message
// or timer expiry at a time and applies the returned Effects.
//
// Primary of view v is node v mod N. The primary forwards one request at a
// time and waits for its own commit (or rejection) before the next. Every
// node, primary included, broadcasts its VERIFY to all N nodes, itself
// included. Commits follow the order in which proposals were first seen, so
// all nodes build the same chain.

#ifndef PCFT_NODE_CONSENSUS_NODE_H_
#define PCFT_NODE_CONSENSUS_NODE_H_

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pcft/crypto/bilinear_group.h"
#include "pcft/node/effects.h"
#include "pcft/protocol/ledger.h"

namespace pcft::node {

struct NodeConfig {
  NodeIndex node_index = 0;
  uint32_t n = 3;
  uint64_t forward_timeout_ms = 100;
  uint64_t viewchange_timeout_ms = 100;
  // Even N is accepted only when set; quorum is then N/2 + 1.
  bool allow_even_n = false;

  // Throws Error(kConfigError).
  void validate() const;
};

struct NodeSnapshot {
  NodeIndex index;
  View view;
  uint64_t height;
  Digest tip_hash;
  uint64_t proposals;
  uint64_t votes;

  // SHA-256 over the fields above in order, integers big-endian.
  Digest hash() const;
};

class ConsensusNode {
 public:
  ConsensusNode(const NodeConfig& config, crypto::BilinearGroup group);

  Effects on_message(const Address& from, const ConsensusMessage& msg);
  Effects on_timeout(uint64_t timer_id);
  // Start a view change as if a timeout had expired.
  Effects force_view_change(const std::string& reason);

  NodeIndex index() const { return cfg_.node_index; }
  View view() const { return view_; }
  bool is_primary() const { return primary_of(view_) == cfg_.node_index; }
  NodeIndex primary_of(View v) const { return static_cast<NodeIndex>(v % cfg_.n); }
  uint32_t quorum() const { return quorum_size(cfg_.n); }
  const protocol::Ledger& ledger() const { return ledger_; }
  NodeSnapshot snapshot() const;

 private:
  using Key = std::pair<View, MessageId>;

  struct Proposal {
    Digest h;
    Bytes delta;
  };
  struct Vote {
    Digest h;
    Bytes delta;
    bool r;
  };
  enum class TimerKind { kRequest, kProbe };
  struct Timer {
    TimerKind kind;
    View view;
    MessageId id;   // kRequest
    View v_new;     // kProbe
  };
  struct Probe {
    View probed_view;
    bool answered = false;
  };

  void on_setup_prime(const protocol::SetupPrime& m, Effects& fx);
  void on_request(const Address& from, const protocol::Request& m, Effects& fx);
  void on_forward(const Address& from, const protocol::Forward& m, Effects& fx);
  void on_verify(const Address& from, const protocol::Verify& m, Effects& fx);
  void on_view_change_vote(View v_new, NodeIndex from, bool ack, Effects& fx);
  void on_pong(const protocol::Pong& m);

  void pump(Effects& fx);
  void propose(const MessageId& id, const Digest& h, const Bytes& delta, Effects& fx);
  void accept_forward(const protocol::Forward& m, Effects& fx);
  bool verify_proof(const MessageId& id, const Digest& h, const Bytes& delta) const;
  void log_proposal(const Key& key, const Digest& h, const Bytes& delta);
  void broadcast_verify(const Key& key, bool r, Effects& fx);
  void try_commit(Effects& fx);
  void check_rejection(const Key& key, Effects& fx);
  void resolved(const MessageId& id, Effects& fx);
  void start_view_change(const std::string& reason, Effects& fx);
  void check_adopt(Effects& fx);
  void adopt(View v, Effects& fx);
  void arm_request_timer(const MessageId& id, Effects& fx);
  uint64_t add_timer(Timer t, uint64_t delay, Effects& fx);
  bool settled(const MessageId& id) const {
    return ledger_.contains(id) || rejected_.contains(id);
  }
  void broadcast_to_others(const ConsensusMessage& m, Effects& fx) const;

  NodeConfig cfg_;
  crypto::BilinearGroup group_;
  View view_ = 0;
  protocol::Ledger ledger_;

  std::map<MessageId, crypto::GroupElement> pk_table_;
  std::map<Key, Proposal> proposal_log_;
  std::vector<Key> proposal_order_;
  std::map<Key, std::map<NodeIndex, Vote>> tally_;
  std::map<Key, std::set<NodeIndex>> discarded_;
  std::deque<MessageId> commit_queue_;
  std::set<MessageId> rejected_;

  // Client requests seen directly, in arrival order.
  std::map<MessageId, protocol::Request> known_requests_;
  std::vector<MessageId> request_order_;

  // Primary only.
  std::deque<MessageId> forward_queue_;
  std::optional<MessageId> in_flight_;

  std::map<View, std::vector<std::pair<NodeIndex, protocol::Forward>>> future_forwards_;
  std::map<View, std::set<NodeIndex>> vc_votes_;
  std::set<View> vc_sent_;
  std::map<View, Probe> probes_;  // keyed by v_new

  std::map<uint64_t, Timer> timers_;
  uint64_t next_timer_ = 1;
};

}  // namespace pcft::node

#endif  // PCFT_NODE_CONSENSUS_NODE_H_
