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

// Deterministic discrete-event simulator for one CA, N consensus nodes and a
// set of clients.
//
// Time is logical (ms). Events run in (time, insertion sequence) order.
// Each message gets a uniform delay in [min_ms, max_ms] drawn from an
// mt19937_64 seeded with rng_seed (min + draw % span). Links are FIFO: a
// message never overtakes an earlier one on the same (from, to) link. CA
// deliveries happen at t = 0 with no delay, before any workload item.
// Crashed nodes process nothing; messages addressed to them are recorded as
// drops but still count as sent.

#ifndef PCFT_SIM_SIMULATOR_H_
#define PCFT_SIM_SIMULATOR_H_

#include <functional>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcft/crypto/bilinear_group.h"
#include "pcft/node/client.h"
#include "pcft/node/consensus_node.h"

namespace pcft::sim {

using node::Address;
using protocol::MessageKind;

struct DelayModel {
  uint64_t min_ms = 1;
  uint64_t max_ms = 10;
};

struct CrashSpec {
  uint64_t time_ms;
  uint32_t node;
};

struct SimConfig {
  uint32_t n = 5;
  uint32_t client_count = 1;
  uint64_t rng_seed = 1;
  DelayModel delay;
  std::vector<CrashSpec> crash_schedule;
  uint64_t horizon_ms = 5000;
  crypto::BackendId backend = crypto::BackendId::kToyExponent;
  // Zero selects 10 x delay.max_ms.
  uint64_t forward_timeout_ms = 0;
  uint64_t viewchange_timeout_ms = 0;
  // Zero selects 20 x delay.max_ms.
  uint64_t client_retransmit_ms = 0;
  bool allow_even_n = false;

  // Throws Error(kConfigError).
  void validate() const;
  uint64_t effective_forward_timeout() const;
  uint64_t effective_viewchange_timeout() const;
  uint64_t effective_client_retransmit() const;
};

// Workload item k of client c is sent with id make_message_id(c, k), where
// k counts that client's items in workload order.
struct WorkItem {
  uint64_t time_ms;
  uint32_t client;
  std::string message;
};

struct Delivery {
  uint64_t send_time;
  Address from;
  Address to;
  const protocol::ConsensusMessage& msg;
};

// Deliver, Drop, or Delay by `extra_ms`.
struct FilterDecision {
  enum Action { kDeliver, kDrop, kDelay } action = kDeliver;
  uint64_t extra_ms = 0;

  static FilterDecision deliver() { return {}; }
  static FilterDecision drop() { return {kDrop, 0}; }
  static FilterDecision delay(uint64_t ms) { return {kDelay, ms}; }
};

using DeliverFilter = std::function<FilterDecision(const Delivery&)>;

struct Metrics {
  std::map<MessageKind, uint64_t> sent;
  uint64_t node_commits = 0;        // commit events across all nodes
  uint64_t requests = 0;            // workload items submitted
  uint64_t completed = 0;           // client-confirmed requests
  uint64_t stalls = 0;              // requests not confirmed by the horizon
  uint64_t view_adoptions = 0;      // view_adopted events across all nodes
  uint64_t stale_drops = 0;
  uint64_t crashed_drops = 0;
  uint64_t filtered_drops = 0;
  uint64_t last_event_ms = 0;

  uint64_t sent_of(MessageKind k) const {
    auto it = sent.find(k);
    return it == sent.end() ? 0 : it->second;
  }
  // REQUEST, FORWARD, VERIFY, FINISH, VIEWCHANGE and VIEWCHANGE_ACK.
  uint64_t consensus_messages() const;
};

struct Trace {
  // One JSON object per line; the first line is the config header.
  std::vector<std::string> lines;
  Metrics metrics;

  std::string ndjson() const;
};

// Sent messages of one kind, including sends to crashed nodes.
uint64_t count_messages(const Trace& trace, MessageKind kind);

class Simulator {
 public:
  Simulator(SimConfig config, std::vector<WorkItem> workload);

  void set_filter(DeliverFilter f) { filter_ = std::move(f); }
  // Schedules a message as if `from` had sent it at `time_ms`.
  void inject(uint64_t time_ms, Address from, Address to, protocol::ConsensusMessage msg);
  // Makes node `node` start a view change at `time_ms`.
  void trigger_view_change(uint64_t time_ms, uint32_t node);

  // Runs to the horizon. Callable once.
  Trace run();

  const node::ConsensusNode& node(uint32_t i) const { return *nodes_.at(i); }
  const node::Client& client(uint32_t c) const { return *clients_.at(c); }
  bool crashed(uint32_t i) const { return crashed_.at(i); }
  const crypto::BilinearGroup& group() const { return group_; }
  const std::vector<protocol::MessageId>& request_ids() const { return request_ids_; }

 private:
  struct Event {
    enum Kind { kDeliver, kCrash, kTimeout, kSubmit, kInject, kForceViewChange };
    uint64_t time = 0;
    uint64_t seq = 0;
    Kind kind = kDeliver;
    Address from;
    Address to;  // also the owner of a timer
    Bytes payload;
    uint64_t msg_seq = 0;
    uint64_t timer_id = 0;
    size_t work_index = 0;
    uint32_t node = 0;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return a.time != b.time ? a.time > b.time : a.seq > b.seq;
    }
  };

  void push(Event e);
  void send(uint64_t now, const Address& from, const node::Send& s, bool immediate);
  void apply(uint64_t now, const Address& who, const node::Effects& fx);
  void handle(const Event& e);
  void record(nlohmann::ordered_json j);
  std::string snapshot_hex(uint32_t i) const;

  SimConfig cfg_;
  std::vector<WorkItem> workload_;
  std::vector<protocol::MessageId> request_ids_;
  crypto::BilinearGroup group_;
  std::vector<std::unique_ptr<node::ConsensusNode>> nodes_;
  std::vector<std::unique_ptr<node::Client>> clients_;
  std::vector<bool> crashed_;
  std::mt19937_64 rng_;
  DeliverFilter filter_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::vector<Event> scheduled_;  // pushed after setup
  std::map<std::pair<Address, Address>, uint64_t> link_tail_;
  uint64_t seq_ = 0;
  uint64_t msg_seq_ = 0;
  bool ran_ = false;
  Trace trace_;
};

}  // namespace pcft::sim

#endif  // PCFT_SIM_SIMULATOR_H_
