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

#include "pcft/sim/simulator.h"

#include <algorithm>

#include "pcft/common/error.h"
#include "pcft/crypto/sha256.h"
#include "pcft/node/ca.h"
#include "pcft/protocol/trace_json.h"

namespace pcft::sim {

using nlohmann::ordered_json;
using node::EventKind;

void SimConfig::validate() const {
  auto bad = [](const std::string& why) { throw Error(ErrorCode::kConfigError, why); };
  if (n < 3) bad("N must be at least 3");
  if (n % 2 == 0 && !allow_even_n) bad("N must be odd (N = 2f + 1)");
  if (delay.min_ms > delay.max_ms) bad("delay min exceeds max");
  if (delay.max_ms == 0) bad("delay max must be positive");
  if (horizon_ms == 0) bad("horizon must be positive");
  for (const CrashSpec& c : crash_schedule) {
    if (c.node >= n) bad("crash index " + std::to_string(c.node) + " out of range");
    if (c.time_ms > horizon_ms) bad("crash time beyond horizon");
  }
}

uint64_t SimConfig::effective_forward_timeout() const {
  return forward_timeout_ms != 0 ? forward_timeout_ms : 10 * delay.max_ms;
}
uint64_t SimConfig::effective_viewchange_timeout() const {
  return viewchange_timeout_ms != 0 ? viewchange_timeout_ms : 10 * delay.max_ms;
}
uint64_t SimConfig::effective_client_retransmit() const {
  return client_retransmit_ms != 0 ? client_retransmit_ms : 20 * delay.max_ms;
}

uint64_t Metrics::consensus_messages() const {
  return sent_of(MessageKind::kRequest) + sent_of(MessageKind::kForward) +
         sent_of(MessageKind::kVerify) + sent_of(MessageKind::kFinish) +
         sent_of(MessageKind::kViewChange) + sent_of(MessageKind::kViewChangeAck);
}

std::string Trace::ndjson() const {
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

uint64_t count_messages(const Trace& trace, MessageKind kind) {
  return trace.metrics.sent_of(kind);
}

namespace {

crypto::BilinearGroup make_group(crypto::BackendId id) {
  return id == crypto::BackendId::kProductionCurve ? crypto::BilinearGroup::production_curve()
                                                   : crypto::BilinearGroup::toy_exponent();
}

}  // namespace

Simulator::Simulator(SimConfig config, std::vector<WorkItem> workload)
    : cfg_(std::move(config)),
      workload_(std::move(workload)),
      group_(make_group(cfg_.backend)),
      rng_(cfg_.rng_seed) {
  cfg_.validate();
  std::vector<uint64_t> per_client(cfg_.client_count, 0);
  for (const WorkItem& w : workload_) {
    if (w.client >= cfg_.client_count) {
      throw Error(ErrorCode::kConfigError, "workload client out of range");
    }
    if (w.time_ms >= cfg_.horizon_ms) {
      throw Error(ErrorCode::kConfigError, "workload time beyond horizon");
    }
    request_ids_.push_back(protocol::make_message_id(w.client, per_client[w.client]++));
  }
  for (uint32_t i = 0; i < cfg_.n; ++i) {
    node::NodeConfig nc;
    nc.node_index = i;
    nc.n = cfg_.n;
    nc.forward_timeout_ms = cfg_.effective_forward_timeout();
    nc.viewchange_timeout_ms = cfg_.effective_viewchange_timeout();
    nc.allow_even_n = cfg_.allow_even_n;
    nodes_.push_back(std::make_unique<node::ConsensusNode>(nc, group_));
  }
  for (uint32_t c = 0; c < cfg_.client_count; ++c) {
    clients_.push_back(std::make_unique<node::Client>(
        node::ClientConfig{c, cfg_.n, cfg_.effective_client_retransmit()}, group_));
  }
  crashed_.assign(cfg_.n, false);
}

void Simulator::inject(uint64_t time_ms, Address from, Address to,
                       protocol::ConsensusMessage msg) {
  Event e;
  e.time = time_ms;
  e.kind = Event::kInject;
  e.from = from;
  e.to = to;
  e.payload = protocol::encode(msg);
  scheduled_.push_back(std::move(e));
}

void Simulator::trigger_view_change(uint64_t time_ms, uint32_t node) {
  Event e;
  e.time = time_ms;
  e.kind = Event::kForceViewChange;
  e.node = node;
  scheduled_.push_back(std::move(e));
}

void Simulator::push(Event e) {
  e.seq = seq_++;
  queue_.push(std::move(e));
}

void Simulator::record(ordered_json j) { trace_.lines.push_back(j.dump()); }

std::string Simulator::snapshot_hex(uint32_t i) const {
  return to_hex(nodes_[i]->snapshot().hash());
}

void Simulator::send(uint64_t now, const Address& from, const node::Send& s, bool immediate) {
  protocol::MessageKind kind = kind_of(s.msg);
  ++trace_.metrics.sent[kind];
  uint64_t id = ++msg_seq_;
  // Drawn before the filter runs so that filtering never shifts the stream.
  uint64_t delay = 0;
  if (!immediate) {
    uint64_t span = cfg_.delay.max_ms - cfg_.delay.min_ms + 1;
    delay = cfg_.delay.min_ms + rng_() % span;
  }
  FilterDecision d = filter_ ? filter_(Delivery{now, from, s.to, s.msg}) : FilterDecision{};
  if (d.action == FilterDecision::kDelay) delay += d.extra_ms;

  uint64_t at = now + delay;
  ordered_json line = {{"t", now},
                       {"type", "send"},
                       {"seq", id},
                       {"from", node::address_name(from)},
                       {"to", node::address_name(s.to)}};
  if (d.action == FilterDecision::kDrop) {
    line["msg"] = protocol::message_to_json(s.msg);
    record(std::move(line));
    ++trace_.metrics.filtered_drops;
    record({{"t", now}, {"type", "drop"}, {"seq", id}, {"reason", "filter"}});
    return;
  }
  uint64_t& tail = link_tail_[{from, s.to}];
  at = std::max(at, tail);
  tail = at;
  line["at"] = at;
  line["msg"] = protocol::message_to_json(s.msg);
  record(std::move(line));

  Event e;
  e.time = at;
  e.kind = Event::kDeliver;
  e.from = from;
  e.to = s.to;
  e.payload = protocol::encode(s.msg);
  e.msg_seq = id;
  push(std::move(e));
}

void Simulator::apply(uint64_t now, const Address& who, const node::Effects& fx) {
  for (const node::NodeEvent& ev : fx.events) {
    ordered_json j = {{"t", now},
                      {"type", "event"},
                      {"at", node::address_name(who)},
                      {"event", node::event_kind_name(ev.kind)},
                      {"v", ev.view}};
    switch (ev.kind) {
      case EventKind::kCommit: {
        ++trace_.metrics.node_commits;
        const protocol::Block& b = nodes_[who.index]->ledger().blocks().at(ev.height);
        j["id"] = to_hex(ev.id);
        j["height"] = b.height;
        j["prev_hash"] = to_hex(b.prev_hash);
        j["block_view"] = b.view;
        ordered_json entries = ordered_json::array();
        for (const protocol::Entry& e : b.entries) {
          entries.push_back({{"id", to_hex(e.id)}, {"h", to_hex(e.h)}, {"delta", to_hex(e.delta)}});
        }
        j["entries"] = std::move(entries);
        j["block_hash"] = to_hex(b.block_hash);
        break;
      }
      case EventKind::kRequestComplete:
        ++trace_.metrics.completed;
        j["id"] = to_hex(ev.id);
        j["block_hash"] = to_hex(ev.block_hash);
        break;
      case EventKind::kViewAdopted:
        ++trace_.metrics.view_adoptions;
        break;
      case EventKind::kStaleView:
        ++trace_.metrics.stale_drops;
        j["id"] = to_hex(ev.id);
        break;
      case EventKind::kViewChangeStarted:
      case EventKind::kViewChangeAck:
        break;
      default:
        j["id"] = to_hex(ev.id);
    }
    if (!ev.detail.empty()) j["detail"] = ev.detail;
    record(std::move(j));
  }
  for (const node::Send& s : fx.sends) send(now, who, s, false);
  for (const node::TimerRequest& t : fx.timers) {
    Event e;
    e.time = now + t.delay_ms;
    e.kind = Event::kTimeout;
    e.to = who;
    e.timer_id = t.timer_id;
    push(std::move(e));
  }
}

void Simulator::handle(const Event& e) {
  const uint64_t now = e.time;
  switch (e.kind) {
    case Event::kCrash:
      crashed_[e.node] = true;
      record({{"t", now}, {"type", "crash"}, {"node", e.node}});
      return;
    case Event::kSubmit: {
      const WorkItem& w = workload_[e.work_index];
      const protocol::MessageId& id = request_ids_[e.work_index];
      ++trace_.metrics.requests;
      record({{"t", now}, {"type", "submit"}, {"client", w.client}, {"id", to_hex(id)}});
      node::Effects fx;
      try {
        clients_[w.client]->request(as_span(w.message), id, fx);
      } catch (const Error& err) {
        record({{"t", now}, {"type", "submit_failed"}, {"id", to_hex(id)}, {"error", err.what()}});
        return;
      }
      apply(now, Address::client(w.client), fx);
      return;
    }
    case Event::kInject:
      send(now, e.from, node::Send{e.to, protocol::decode(e.payload)}, true);
      return;
    case Event::kForceViewChange: {
      if (crashed_[e.node]) return;
      node::Effects fx = nodes_[e.node]->force_view_change("injected");
      record({{"t", now}, {"type", "trigger"}, {"node", e.node}});
      apply(now, Address::node(e.node), fx);
      return;
    }
    case Event::kTimeout: {
      node::Effects fx;
      ordered_json j = {{"t", now}, {"type", "timeout"}, {"at", node::address_name(e.to)},
                        {"timer", e.timer_id}};
      if (e.to.role == node::Role::kNode) {
        if (crashed_[e.to.index]) return;
        fx = nodes_[e.to.index]->on_timeout(e.timer_id);
        j["snapshot"] = snapshot_hex(e.to.index);
      } else {
        fx = clients_[e.to.index]->on_timeout(e.timer_id);
      }
      record(std::move(j));
      apply(now, e.to, fx);
      return;
    }
    case Event::kDeliver: {
      protocol::ConsensusMessage msg = protocol::decode(e.payload);
      const char* kind = kind_name(kind_of(msg));
      ordered_json j = {{"t", now}, {"type", "deliver"}, {"seq", e.msg_seq},
                        {"to", node::address_name(e.to)}, {"kind", kind}};
      node::Effects fx;
      if (e.to.role == node::Role::kNode) {
        if (crashed_[e.to.index]) {
          ++trace_.metrics.crashed_drops;
          record({{"t", now}, {"type", "drop"}, {"seq", e.msg_seq}, {"reason", "crashed"}});
          return;
        }
        fx = nodes_[e.to.index]->on_message(e.from, msg);
        j["snapshot"] = snapshot_hex(e.to.index);
      } else if (e.to.role == node::Role::kClient) {
        fx = clients_[e.to.index]->on_message(e.from, msg);
      }
      record(std::move(j));
      apply(now, e.to, fx);
      return;
    }
  }
}

Trace Simulator::run() {
  if (ran_) throw Error(ErrorCode::kConfigError, "simulator already ran");
  ran_ = true;

  ordered_json crashes = ordered_json::array();
  for (const CrashSpec& c : cfg_.crash_schedule) crashes.push_back({c.time_ms, c.node});
  record({{"type", "config"},
          {"version", 1},
          {"n", cfg_.n},
          {"clients", cfg_.client_count},
          {"seed", cfg_.rng_seed},
          {"backend", crypto::backend_name(cfg_.backend)},
          {"delay_min_ms", cfg_.delay.min_ms},
          {"delay_max_ms", cfg_.delay.max_ms},
          {"forward_timeout_ms", cfg_.effective_forward_timeout()},
          {"viewchange_timeout_ms", cfg_.effective_viewchange_timeout()},
          {"client_retransmit_ms", cfg_.effective_client_retransmit()},
          {"horizon_ms", cfg_.horizon_ms},
          {"crashes", crashes},
          {"requests", workload_.size()}});

  // Setup: one key pair per request id.
  Bytes seed_src = to_bytes("pcft/sim-ca");
  append_u64_be(seed_src, cfg_.rng_seed);
  node::CertificateAuthority ca(group_, crypto::sha256(seed_src));
  std::vector<node::ClientIds> ids(cfg_.client_count);
  for (uint32_t c = 0; c < cfg_.client_count; ++c) ids[c].client = c;
  for (size_t k = 0; k < workload_.size(); ++k) {
    ids[workload_[k].client].ids.push_back(request_ids_[k]);
  }
  for (const node::Send& s : ca.setup(ids, cfg_.n)) send(0, Address::ca(), s, true);

  for (const CrashSpec& c : cfg_.crash_schedule) {
    Event e;
    e.time = c.time_ms;
    e.kind = Event::kCrash;
    e.node = c.node;
    push(std::move(e));
  }
  for (size_t k = 0; k < workload_.size(); ++k) {
    Event e;
    e.time = workload_[k].time_ms;
    e.kind = Event::kSubmit;
    e.work_index = k;
    push(std::move(e));
  }
  for (Event& e : scheduled_) push(std::move(e));
  scheduled_.clear();

  while (!queue_.empty() && queue_.top().time <= cfg_.horizon_ms) {
    Event e = queue_.top();
    queue_.pop();
    trace_.metrics.last_event_ms = e.time;
    handle(e);
  }
  Metrics& m = trace_.metrics;
  m.stalls = m.requests - m.completed;
  record({{"type", "end"},
          {"t", cfg_.horizon_ms},
          {"requests", m.requests},
          {"completed", m.completed},
          {"node_commits", m.node_commits},
          {"view_adoptions", m.view_adoptions},
          {"verify_msgs", m.sent_of(MessageKind::kVerify)},
          {"total_msgs", m.consensus_messages()}});
  return trace_;
}

}  // namespace pcft::sim
