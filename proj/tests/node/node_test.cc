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

#include <algorithm>
#include <deque>
#include <memory>

#include "pcft/common/error.h"
#include "pcft/crypto/proof.h"
#include "pcft/crypto/sha256.h"
#include "pcft/node/ca.h"
#include "pcft/node/client.h"
#include "pcft/node/consensus_node.h"

namespace pcft::node {
namespace {

using crypto::BilinearGroup;
using protocol::MessageKind;
using protocol::make_message_id;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kParseError;
}

size_t count_kind(const std::vector<Send>& sends, MessageKind k) {
  return std::count_if(sends.begin(), sends.end(),
                       [k](const Send& s) { return kind_of(s.msg) == k; });
}

bool has_event(const Effects& fx, EventKind k) {
  return std::any_of(fx.events.begin(), fx.events.end(),
                     [k](const NodeEvent& e) { return e.kind == k; });
}

// Synchronous FIFO delivery between in-process state machines. Timers are
// collected and fired by hand.
class Harness {
 public:
  Harness(uint32_t n, bool allow_even = false)
      : n_(n), group_(BilinearGroup::toy_exponent()) {
    for (uint32_t i = 0; i < n; ++i) {
      NodeConfig cfg;
      cfg.node_index = i;
      cfg.n = n;
      cfg.allow_even_n = allow_even;
      nodes_.push_back(std::make_unique<ConsensusNode>(cfg, group_));
    }
    client_ = std::make_unique<Client>(ClientConfig{0, n, 200}, group_);
    alive_.assign(n, true);
  }

  void setup(const std::vector<MessageId>& ids) {
    std::array<uint8_t, 32> seed{};
    CertificateAuthority ca(group_, seed);
    for (Send& s : ca.setup({{0, ids}}, n_)) queue_.push_back({Address::ca(), std::move(s)});
    run();
  }

  void deliver(const Address& from, const Effects& fx) {
    for (const NodeEvent& e : fx.events) events_.push_back({from, e});
    for (const Send& s : fx.sends) {
      sent_.push_back(s);
      queue_.push_back({from, s});
    }
    for (const TimerRequest& t : fx.timers) timers_.push_back({from, t.timer_id});
  }

  void run() {
    while (!queue_.empty()) {
      auto [from, s] = std::move(queue_.front());
      queue_.pop_front();
      if (drop_ && drop_(from, s)) continue;
      if (s.to.role == Role::kNode) {
        if (!alive_[s.to.index]) continue;
        deliver(s.to, nodes_[s.to.index]->on_message(from, s.msg));
      } else if (s.to.role == Role::kClient) {
        deliver(s.to, client_->on_message(from, s.msg));
      }
    }
  }

  // Fires every pending timer once, in the order they were armed.
  void fire_timers() {
    auto pending = std::move(timers_);
    timers_.clear();
    for (auto [who, id] : pending) {
      if (who.role == Role::kNode) {
        if (alive_[who.index]) deliver(who, nodes_[who.index]->on_timeout(id));
      } else {
        deliver(who, client_->on_timeout(id));
      }
    }
    run();
  }

  MessageId submit(uint64_t seq, std::string_view m) {
    MessageId id = make_message_id(0, seq);
    Effects fx;
    client_->request(as_span(m), id, fx);
    deliver(Address::client(0), fx);
    run();
    return id;
  }

  size_t events_of(EventKind k) const {
    return std::count_if(events_.begin(), events_.end(),
                         [k](const auto& e) { return e.second.kind == k; });
  }

  uint32_t n_;
  BilinearGroup group_;
  std::vector<std::unique_ptr<ConsensusNode>> nodes_;
  std::unique_ptr<Client> client_;
  std::vector<bool> alive_;
  std::deque<std::pair<Address, Send>> queue_;
  std::vector<Send> sent_;
  std::vector<std::pair<Address, uint64_t>> timers_;
  std::vector<std::pair<Address, NodeEvent>> events_;
  std::function<bool(const Address&, const Send&)> drop_;
};

TEST(NodeConfigTest, Validation) {
  NodeConfig c;
  c.n = 5;
  EXPECT_NO_THROW(c.validate());
  c.n = 4;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::kConfigError);
  c.allow_even_n = true;
  EXPECT_NO_THROW(c.validate());
  c.n = 1;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::kConfigError);
  c.n = 5;
  c.node_index = 5;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::kConfigError);
  c.node_index = 0;
  c.forward_timeout_ms = 0;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::kConfigError);
}

TEST(NodeConfigTest, Quorum) {
  EXPECT_EQ(quorum_size(3), 2u);
  EXPECT_EQ(quorum_size(4), 3u);
  EXPECT_EQ(quorum_size(5), 3u);
  EXPECT_EQ(quorum_size(7), 4u);
  EXPECT_EQ(quorum_size(11), 6u);
}

TEST(CaTest, OneClientFourNodes) {
  auto group = BilinearGroup::toy_exponent();
  CertificateAuthority ca(group, std::array<uint8_t, 32>{});
  MessageId id = make_message_id(0, 0);
  std::vector<Send> out = ca.setup({{0, {id}}}, 4);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(count_kind(out, MessageKind::kSetup), 1u);
  EXPECT_EQ(count_kind(out, MessageKind::kSetupPrime), 4u);
  const auto& setup = std::get<protocol::Setup>(out[0].msg);
  EXPECT_EQ(out[0].to, Address::client(0));
  crypto::Scalar sk = group.decode_scalar(setup.sk);
  for (size_t k = 1; k < out.size(); ++k) {
    EXPECT_EQ(out[k].to, Address::node(static_cast<uint32_t>(k - 1)));
    const auto& sp = std::get<protocol::SetupPrime>(out[k].msg);
    EXPECT_EQ(group.decode_exact(sp.pk), group.pow(group.generator(), sk));
  }
}

TEST(CaTest, CurveKeyIsSentAsG2Image) {
  auto group = BilinearGroup::production_curve();
  CertificateAuthority ca(group, std::array<uint8_t, 32>{7});
  MessageId id = make_message_id(0, 0);
  std::vector<Send> out = ca.setup({{0, {id}}}, 1);
  crypto::Scalar sk = group.decode_scalar(std::get<protocol::Setup>(out[0].msg).sk);
  const Bytes& pk_bytes = std::get<protocol::SetupPrime>(out[1].msg).pk;
  ASSERT_EQ(pk_bytes.size(), 97u);
  EXPECT_EQ(pk_bytes[0], 0x12);
  crypto::GroupElement pk = group.decode_exact(pk_bytes);
  EXPECT_EQ(pk, group.pairing_partner_form(group.pow(group.generator(), sk)));
  crypto::Proof p = crypto::proof_gen(to_bytes("m"), sk, group);
  EXPECT_TRUE(crypto::proof_verify(p, pk, group));
}

TEST(CaTest, EmptyAndRepeated) {
  auto group = BilinearGroup::toy_exponent();
  CertificateAuthority ca(group, std::array<uint8_t, 32>{});
  EXPECT_TRUE(ca.setup({}, 4).empty());
  EXPECT_EQ(code_of([&] { ca.setup({}, 4); }), ErrorCode::kDuplicateSetup);
}

TEST(ClientTest, RequestVerifiesUnderCaKey) {
  auto group = BilinearGroup::toy_exponent();
  CertificateAuthority ca(group, std::array<uint8_t, 32>{1});
  MessageId id = make_message_id(0, 7);
  std::vector<Send> setup = ca.setup({{0, {id}}}, 3);
  Client c(ClientConfig{0, 3, 200}, group);
  c.on_message(Address::ca(), setup[0].msg);
  Effects fx;
  const std::string m = "pay 5 to carol";
  protocol::Request r = c.request(as_span(m), id, fx);
  ASSERT_EQ(fx.sends.size(), 1u);
  EXPECT_EQ(fx.sends[0].to, Address::node(0));
  const auto& pk = std::get<protocol::SetupPrime>(setup[1].msg).pk;
  EXPECT_TRUE(crypto::proof_verify(crypto::Proof{group.decode_exact(r.delta), r.h},
                                   group.decode_exact(pk), group));
  EXPECT_EQ(r.h, crypto::sha256(as_span(m)));
  Bytes wire = protocol::encode(r);
  EXPECT_EQ(std::search(wire.begin(), wire.end(), m.begin(), m.end()), wire.end());

  EXPECT_EQ(code_of([&] { c.request(as_span(m), id, fx); }), ErrorCode::kDuplicateRequest);
  EXPECT_EQ(code_of([&] { c.request(as_span(m), make_message_id(0, 8), fx); }),
            ErrorCode::kNoKey);
}

TEST(ClientTest, CollectFinishEvenN) {
  Harness h(4, true);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Effects fx;
  h.client_->request(as_span("x"), id, fx);
  Client& c = *h.client_;
  protocol::Finish f{id, 0, Digest{}};
  EXPECT_FALSE(has_event(c.on_message(Address::node(0), f), EventKind::kRequestComplete));
  EXPECT_FALSE(has_event(c.on_message(Address::node(1), f), EventKind::kRequestComplete));
  EXPECT_FALSE(c.is_complete(id));
  // Same node again: no change.
  c.on_message(Address::node(1), f);
  EXPECT_EQ(c.finish_count(id), 2u);
  EXPECT_TRUE(has_event(c.on_message(Address::node(2), f), EventKind::kRequestComplete));
  EXPECT_TRUE(c.is_complete(id));
  EXPECT_FALSE(has_event(c.on_message(Address::node(3), f), EventKind::kRequestComplete));
  Effects u = c.on_message(Address::node(0), protocol::Finish{make_message_id(0, 99), 0, {}});
  EXPECT_TRUE(has_event(u, EventKind::kUnknownId));
}

TEST(PrimaryTest, ForwardFanOutEvenN) {
  Harness h(4, true);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Effects fx;
  protocol::Request r = h.client_->request(as_span("hello"), id, fx);
  Effects out = h.nodes_[0]->on_message(Address::client(0), r);
  EXPECT_EQ(count_kind(out.sends, MessageKind::kForward), 3u);
  EXPECT_EQ(count_kind(out.sends, MessageKind::kVerify), 4u);
  for (const Send& s : out.sends) {
    if (kind_of(s.msg) == MessageKind::kForward) {
      EXPECT_NE(s.to, Address::node(0));
    }
  }
  // Same page, different tuple.
  protocol::Request other = r;
  other.h[0] ^= 1;
  Effects eq = h.nodes_[0]->on_message(Address::client(0), other);
  EXPECT_TRUE(has_event(eq, EventKind::kEquivocation));
  EXPECT_EQ(count_kind(eq.sends, MessageKind::kForward), 0u);
  // Exact repeat is ignored.
  EXPECT_TRUE(h.nodes_[0]->on_message(Address::client(0), r).sends.empty());
}

TEST(PrimaryTest, ReplicaRelaysRequest) {
  Harness h(5);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Effects fx;
  protocol::Request r = h.client_->request(as_span("hello"), id, fx);
  Effects out = h.nodes_[2]->on_message(Address::client(0), r);
  ASSERT_EQ(out.sends.size(), 1u);
  EXPECT_EQ(out.sends[0].to, Address::node(0));
  EXPECT_EQ(kind_of(out.sends[0].msg), MessageKind::kRequest);
  EXPECT_EQ(out.timers.size(), 1u);
}

TEST(ReplicaTest, VerifyOutcomes) {
  Harness h(5);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Effects fx;
  protocol::Request r = h.client_->request(as_span("hello"), id, fx);
  protocol::Forward fwd{id, r.h, r.delta, 0};

  Effects ok = h.nodes_[1]->on_message(Address::node(0), fwd);
  ASSERT_EQ(count_kind(ok.sends, MessageKind::kVerify), 5u);
  EXPECT_TRUE(std::get<protocol::Verify>(ok.sends[0].msg).r);

  // Tampered delta: the exponent moves by one.
  protocol::Forward bad = fwd;
  bad.delta.back() ^= 1;
  Effects no = h.nodes_[2]->on_message(Address::node(0), bad);
  ASSERT_EQ(count_kind(no.sends, MessageKind::kVerify), 5u);
  EXPECT_FALSE(std::get<protocol::Verify>(no.sends[0].msg).r);
}

TEST(ReplicaTest, StaleForwardDropped) {
  Harness h(3);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  // Move every node to view 1.
  h.nodes_[0]->force_view_change("test");
  h.alive_[0] = false;
  for (auto& s : h.nodes_[1]->force_view_change("test").sends) {
    h.queue_.push_back({Address::node(1), s});
  }
  h.run();
  h.fire_timers();
  ASSERT_EQ(h.nodes_[1]->view(), 1u);
  ASSERT_EQ(h.nodes_[2]->view(), 1u);
  Effects fx;
  protocol::Request r = h.client_->request(as_span("m"), id, fx);
  Effects st = h.nodes_[2]->on_message(Address::node(0), protocol::Forward{id, r.h, r.delta, 0});
  EXPECT_TRUE(has_event(st, EventKind::kStaleView));
  EXPECT_TRUE(st.sends.empty());
}

TEST(TallyTest, QuorumOfThreeCommits) {
  Harness h(5);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Effects fx;
  protocol::Request r = h.client_->request(as_span("hello"), id, fx);
  ConsensusNode& node = *h.nodes_[3];
  node.on_message(Address::node(0), protocol::Forward{id, r.h, r.delta, 0});
  auto vote = [&](NodeIndex i) {
    return node.on_message(Address::node(i), protocol::Verify{id, r.h, r.delta, 0, i, true});
  };
  EXPECT_FALSE(has_event(vote(0), EventKind::kCommit));
  EXPECT_FALSE(has_event(vote(0), EventKind::kCommit));  // counted once
  EXPECT_FALSE(has_event(vote(1), EventKind::kCommit));
  EXPECT_EQ(node.ledger().height(), 0u);
  Effects c = vote(2);
  ASSERT_TRUE(has_event(c, EventKind::kCommit));
  EXPECT_EQ(node.ledger().height(), 1u);
  ASSERT_EQ(count_kind(c.sends, MessageKind::kFinish), 1u);
  EXPECT_EQ(c.sends.back().to, Address::client(0));
  EXPECT_EQ(std::get<protocol::Finish>(c.sends.back().msg).block_hash,
            node.ledger().tip().block_hash);
  EXPECT_FALSE(has_event(vote(4), EventKind::kCommit));
  EXPECT_EQ(node.ledger().height(), 1u);
}

TEST(TallyTest, InconsistentSenderDiscarded) {
  Harness h(5);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Effects fx;
  protocol::Request r = h.client_->request(as_span("hello"), id, fx);
  ConsensusNode& node = *h.nodes_[3];
  node.on_message(Address::node(0), protocol::Forward{id, r.h, r.delta, 0});
  node.on_message(Address::node(0), protocol::Verify{id, r.h, r.delta, 0, 0, true});
  node.on_message(Address::node(1), protocol::Verify{id, r.h, r.delta, 0, 1, true});
  Effects e = node.on_message(Address::node(1), protocol::Verify{id, r.h, r.delta, 0, 1, false});
  EXPECT_TRUE(has_event(e, EventKind::kInconsistentVerify));
  // Node 1's vote is gone, so two more are needed.
  EXPECT_FALSE(has_event(node.on_message(Address::node(2),
                                         protocol::Verify{id, r.h, r.delta, 0, 2, true}),
                         EventKind::kCommit));
  EXPECT_TRUE(has_event(node.on_message(Address::node(4),
                                        protocol::Verify{id, r.h, r.delta, 0, 4, true}),
                        EventKind::kCommit));
}

TEST(TallyTest, TwoVotesThenSilenceStalls) {
  Harness h(5);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  h.alive_[2] = h.alive_[3] = h.alive_[4] = false;
  h.submit(0, "hello");
  EXPECT_EQ(h.nodes_[0]->ledger().height(), 0u);
  EXPECT_EQ(h.nodes_[1]->ledger().height(), 0u);
  EXPECT_FALSE(h.client_->is_complete(id));
}

TEST(EndToEndTest, HappyPathCountsEvenN) {
  Harness h(4, true);
  h.setup({make_message_id(0, 0)});
  h.sent_.clear();
  MessageId id = h.submit(0, "hello");
  EXPECT_EQ(count_kind(h.sent_, MessageKind::kForward), 3u);
  EXPECT_EQ(count_kind(h.sent_, MessageKind::kVerify), 16u);
  EXPECT_EQ(count_kind(h.sent_, MessageKind::kFinish), 4u);
  EXPECT_TRUE(h.client_->is_complete(id));
  for (auto& n : h.nodes_) {
    EXPECT_EQ(n->ledger().height(), 1u);
    EXPECT_EQ(n->ledger().tip(), h.nodes_[0]->ledger().tip());
    EXPECT_TRUE(protocol::validate_chain(n->ledger()).ok);
  }
}

TEST(EndToEndTest, InvalidProofRejectedWithoutViewChange) {
  Harness h(5);
  MessageId a = make_message_id(0, 0), b = make_message_id(0, 1);
  h.setup({a, b});
  // Corrupt every REQUEST for `a` on its way to the primary.
  h.drop_ = [&](const Address&, const Send& s) {
    if (auto* r = std::get_if<protocol::Request>(&s.msg); r && r->id == a) {
      protocol::Request bad = *r;
      bad.delta.back() ^= 1;
      h.queue_.push_front({Address::client(0), Send{s.to, bad}});
      h.drop_ = nullptr;
      return true;
    }
    return false;
  };
  h.submit(0, "first");
  h.submit(1, "second");
  EXPECT_EQ(h.events_of(EventKind::kRejected), 5u);
  EXPECT_FALSE(h.client_->is_complete(a));
  EXPECT_TRUE(h.client_->is_complete(b));
  h.fire_timers();
  EXPECT_EQ(h.events_of(EventKind::kViewChangeStarted), 0u);
  for (auto& n : h.nodes_) EXPECT_EQ(n->ledger().height(), 1u);
}

TEST(EndToEndTest, SequentialRequestsSameChain) {
  Harness h(5);
  std::vector<MessageId> ids;
  for (uint64_t s = 0; s < 6; ++s) ids.push_back(make_message_id(0, s));
  h.setup(ids);
  for (uint64_t s = 0; s < 6; ++s) h.submit(s, "m" + std::to_string(s));
  EXPECT_EQ(h.client_->completed(), 6u);
  for (auto& n : h.nodes_) {
    EXPECT_EQ(n->ledger().height(), 6u);
    EXPECT_EQ(n->ledger().tip().block_hash, h.nodes_[0]->ledger().tip().block_hash);
  }
}

TEST(ViewChangeTest, PrimaryCrashAdoptsNextView) {
  Harness h(5);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  h.alive_[0] = false;
  h.submit(0, "hello");
  EXPECT_FALSE(h.client_->is_complete(id));
  h.fire_timers();  // client re-broadcasts; replicas relay and arm timers
  h.fire_timers();  // forward timeouts -> VIEWCHANGE, probes armed
  h.fire_timers();  // probes time out -> ACKs
  for (uint32_t i = 1; i < 5; ++i) {
    EXPECT_EQ(h.nodes_[i]->view(), 1u) << i;
    EXPECT_EQ(h.nodes_[i]->ledger().height(), 1u) << i;
  }
  EXPECT_TRUE(h.nodes_[1]->is_primary());
  EXPECT_TRUE(h.client_->is_complete(id));
}

TEST(ViewChangeTest, SpuriousTimeoutDoesNotChangeView) {
  Harness h(5);
  h.setup({});
  Effects fx = h.nodes_[3]->force_view_change("spurious");
  EXPECT_EQ(count_kind(fx.sends, MessageKind::kViewChange), 4u);
  h.deliver(Address::node(3), fx);
  h.run();
  h.fire_timers();  // probes: the primary answered every PING
  for (auto& n : h.nodes_) EXPECT_EQ(n->view(), 0u);
  EXPECT_EQ(h.events_of(EventKind::kViewChangeAck), 0u);
  EXPECT_EQ(h.events_of(EventKind::kViewAdopted), 0u);
}

TEST(ViewChangeTest, StaleViewChangeDropped) {
  Harness h(5);
  Effects fx = h.nodes_[2]->on_message(Address::node(1), protocol::ViewChange{0, 1});
  EXPECT_TRUE(has_event(fx, EventKind::kDroppedMessage));
  EXPECT_TRUE(fx.sends.empty());
  // A VIEWCHANGE naming someone else is ignored.
  EXPECT_TRUE(h.nodes_[2]->on_message(Address::node(1), protocol::ViewChange{1, 3}).sends.empty());
}

TEST(ViewChangeTest, UnansweredProbeAcks) {
  Harness h(5);
  h.alive_[0] = false;
  h.deliver(Address::node(4), h.nodes_[4]->force_view_change("test"));
  h.run();
  EXPECT_EQ(h.nodes_[1]->view(), 0u);
  h.fire_timers();
  EXPECT_EQ(h.events_of(EventKind::kViewChangeAck), 3u);
  for (uint32_t i = 1; i < 5; ++i) EXPECT_EQ(h.nodes_[i]->view(), 1u);
}

TEST(SnapshotTest, HashTracksState) {
  Harness h(3);
  MessageId id = make_message_id(0, 0);
  h.setup({id});
  Digest before = h.nodes_[1]->snapshot().hash();
  h.submit(0, "x");
  NodeSnapshot s = h.nodes_[1]->snapshot();
  EXPECT_EQ(s.height, 1u);
  EXPECT_EQ(s.votes, 3u);
  EXPECT_NE(s.hash(), before);
}

}  // namespace
}  // namespace pcft::node
