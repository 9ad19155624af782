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

#include "pcft/sim/trace_checker.h"

#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pcft/crypto/bilinear_group.h"
#include "pcft/crypto/proof.h"
#include "pcft/protocol/ledger.h"
#include "pcft/protocol/trace_json.h"

namespace pcft::sim {

using nlohmann::json;
using protocol::ConsensusMessage;
using protocol::MessageId;

bool CheckReport::ok() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) {
      if (c.line) out << " line " << *c.line;
      out << ": " << c.detail;
    }
    out << '\n';
  }
  for (const std::string& w : warnings) out << "WARN " << w << '\n';
  return out.str();
}

namespace {

constexpr const char* kCheckNames[] = {"agreement",       "validity",        "quorum-safety",
                                       "chain-integrity", "no-equivocation", "crash-stop"};

// Endpoint in a trace: "node:3", "client:0" or "ca".
struct Endpoint {
  char role;  // 'n', 'c' or 'a'
  uint32_t index;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

class Checker {
 public:
  void feed(size_t line_no, const std::string& text) {
    line_ = line_no;
    if (text.empty()) return;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      fail_parse(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail_parse("record must be an object");
    std::string type = str(j, "type");
    ++report_.records;
    if (line_no == 1) {
      if (type != "config") fail_parse("first record must be the config header");
      on_config(j);
      return;
    }
    if (type == "config") fail_parse("repeated config header");
    if (type == "send") {
      on_send(j);
    } else if (type == "deliver") {
      on_deliver(j);
    } else if (type == "crash") {
      crashed_.insert(static_cast<uint32_t>(num(j, "node")));
    } else if (type == "event") {
      on_event(j);
    } else if (type == "timeout") {
      Endpoint at = endpoint(str(j, "at"));
      if (at.role == 'n' && crashed_.contains(at.index)) {
        violate("crash-stop", "timeout processed by crashed node " + std::to_string(at.index));
      }
    } else if (type == "drop" || type == "submit" || type == "submit_failed" ||
               type == "trigger" || type == "end") {
      // Nothing to re-check.
    } else {
      fail_parse("unknown record type " + type);
    }
  }

  CheckReport finish() {
    if (report_.records == 0) {
      report_.warnings.push_back("empty trace: all checks pass vacuously");
    } else if (report_.commits == 0) {
      report_.warnings.push_back("trace contains no commits");
    }
    for (auto& [node, chain] : chains_) {
      std::vector<protocol::Block> blocks = {protocol::genesis_block()};
      for (const auto& [b, line] : chain) blocks.push_back(b);
      protocol::ChainReport r = protocol::validate_chain(protocol::Ledger::from_blocks(blocks));
      if (!r.ok) {
        size_t at = *r.violation_height == 0 ? chain.front().second
                                             : chain[*r.violation_height - 1].second;
        violate_at("chain-integrity", at,
                   "node " + std::to_string(node) + " height " +
                       std::to_string(*r.violation_height) + ": " + r.reason);
      }
    }
    for (const char* name : kCheckNames) {
      auto it = failures_.find(name);
      if (it == failures_.end()) {
        report_.checks.push_back({name, true, "", std::nullopt});
      } else {
        report_.checks.push_back(it->second);
      }
    }
    return report_;
  }

 private:
  struct SendRec {
    Endpoint from;
    Endpoint to;
    ConsensusMessage msg;
  };
  struct VoteRec {
    Digest h;
    Bytes delta;
    bool r;
    bool conflicted = false;
  };

  [[noreturn]] void fail_parse(const std::string& why) const { throw TraceParseError(line_, why); }

  const json& field(const json& j, const char* name) const {
    auto it = j.find(name);
    if (it == j.end()) fail_parse(std::string("missing field ") + name);
    return *it;
  }
  std::string str(const json& j, const char* name) const {
    const json& f = field(j, name);
    if (!f.is_string()) fail_parse(std::string(name) + " must be a string");
    return f.get<std::string>();
  }
  uint64_t num(const json& j, const char* name) const {
    const json& f = field(j, name);
    if (!f.is_number_unsigned()) fail_parse(std::string(name) + " must be an unsigned integer");
    return f.get<uint64_t>();
  }
  Bytes hex(const json& j, const char* name) const {
    try {
      return from_hex(str(j, name));
    } catch (const TraceParseError&) {
      throw;
    } catch (const std::exception&) {
      fail_parse(std::string(name) + " is not hex");
    }
  }
  template <size_t N>
  std::array<uint8_t, N> fixed(const json& j, const char* name) const {
    Bytes b = hex(j, name);
    if (b.size() != N) fail_parse(std::string(name) + " has wrong length");
    std::array<uint8_t, N> out;
    std::copy(b.begin(), b.end(), out.begin());
    return out;
  }
  Endpoint endpoint(const std::string& s) const {
    if (s == "ca") return {'a', 0};
    auto colon = s.find(':');
    if (colon == std::string::npos) fail_parse("bad endpoint " + s);
    std::string role = s.substr(0, colon);
    uint32_t index = 0;
    try {
      size_t used = 0;
      unsigned long v = std::stoul(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1 || v > UINT32_MAX) throw std::out_of_range("");
      index = static_cast<uint32_t>(v);
    } catch (const std::exception&) {
      fail_parse("bad endpoint " + s);
    }
    if (role == "node") {
      if (index >= n_) fail_parse("node index out of range in " + s);
      return {'n', index};
    }
    if (role == "client") return {'c', index};
    fail_parse("bad endpoint " + s);
  }

  void violate(const std::string& check, const std::string& detail) {
    violate_at(check, line_, detail);
  }
  void violate_at(const std::string& check, size_t line, const std::string& detail) {
    if (!failures_.contains(check)) failures_[check] = CheckResult{check, false, detail, line};
  }

  void on_config(const json& j) {
    n_ = static_cast<uint32_t>(num(j, "n"));
    if (n_ == 0) fail_parse("n must be positive");
    std::string backend = str(j, "backend");
    if (backend == "curve") {
      group_.emplace(crypto::BilinearGroup::production_curve());
    } else if (backend == "toy") {
      group_.emplace(crypto::BilinearGroup::toy_exponent());
    } else {
      fail_parse("unknown backend " + backend);
    }
  }

  void on_send(const json& j) {
    uint64_t seq = num(j, "seq");
    Endpoint from = endpoint(str(j, "from"));
    Endpoint to = endpoint(str(j, "to"));
    ConsensusMessage msg;
    try {
      msg = protocol::message_from_json(field(j, "msg"));
    } catch (const Error& e) {
      fail_parse(e.what());
    }
    if (from.role == 'n' && crashed_.contains(from.index)) {
      violate("crash-stop", "send from crashed node " + std::to_string(from.index));
    }
    if (const auto* sp = std::get_if<protocol::SetupPrime>(&msg)) {
      auto [it, fresh] = pk_bytes_.emplace(sp->id, sp->pk);
      if (!fresh && it->second != sp->pk) {
        violate("validity", "conflicting public keys for id " + to_hex(sp->id));
      }
    }
    if (!sends_.emplace(seq, SendRec{from, to, std::move(msg)}).second) {
      fail_parse("duplicate send seq " + std::to_string(seq));
    }
  }

  void on_deliver(const json& j) {
    uint64_t seq = num(j, "seq");
    Endpoint to = endpoint(str(j, "to"));
    auto it = sends_.find(seq);
    if (it == sends_.end()) fail_parse("delivery of unknown seq " + std::to_string(seq));
    const SendRec& s = it->second;
    if (s.to != to) fail_parse("delivery target differs from send record");
    if (to.role != 'n') return;
    if (crashed_.contains(to.index)) {
      violate("crash-stop", "delivery processed by crashed node " + std::to_string(to.index));
    }
    const auto* v = std::get_if<protocol::Verify>(&s.msg);
    if (v == nullptr || s.from.role != 'n' || s.from.index != v->i) return;
    auto& votes = delivered_[to.index][{v->v, v->id}];
    auto [vit, fresh] = votes.emplace(v->i, VoteRec{v->h, v->delta, v->r});
    if (!fresh) {
      VoteRec& old = vit->second;
      if (old.h != v->h || old.delta != v->delta || old.r != v->r) old.conflicted = true;
    }
  }

  bool verifies(const MessageId& id, const Digest& h, const Bytes& delta) {
    auto key = std::make_tuple(id, h, delta);
    auto cached = verified_.find(key);
    if (cached != verified_.end()) return cached->second;
    bool ok = false;
    auto pk = pk_bytes_.find(id);
    if (pk != pk_bytes_.end() && group_) {
      try {
        crypto::Proof p{group_->decode_exact(delta), h};
        ok = crypto::proof_verify(p, group_->decode_exact(pk->second), *group_);
      } catch (const Error&) {
        ok = false;
      }
    }
    verified_.emplace(key, ok);
    return ok;
  }

  void on_event(const json& j) {
    if (str(j, "event") != "commit") return;
    Endpoint at = endpoint(str(j, "at"));
    if (at.role != 'n') fail_parse("commit from a non-node");
    ++report_.commits;
    if (crashed_.contains(at.index)) {
      violate("crash-stop", "commit by crashed node " + std::to_string(at.index));
    }
    protocol::Block b;
    b.height = num(j, "height");
    b.prev_hash = fixed<32>(j, "prev_hash");
    b.view = num(j, "block_view");
    b.block_hash = fixed<32>(j, "block_hash");
    const json& entries = field(j, "entries");
    if (!entries.is_array()) fail_parse("entries must be an array");
    for (const json& e : entries) {
      if (!e.is_object()) fail_parse("entry must be an object");
      b.entries.push_back(protocol::Entry{fixed<16>(e, "id"), fixed<32>(e, "h"), hex(e, "delta")});
    }

    auto [hit, fresh] = height_hash_.emplace(b.height, b.block_hash);
    if (!fresh && hit->second != b.block_hash) {
      violate("agreement", "node " + std::to_string(at.index) + " committed a different block at height " +
                               std::to_string(b.height));
    }

    const uint32_t quorum = n_ / 2 + 1;
    for (const protocol::Entry& e : b.entries) {
      if (!verifies(e.id, e.h, e.delta)) {
        violate("validity", "delta for id " + to_hex(e.id) + " does not verify");
      }
      auto [eit, efresh] = committed_tuple_.emplace(e.id, std::make_pair(e.h, e.delta));
      if (!efresh && (eit->second.first != e.h || eit->second.second != e.delta)) {
        violate("no-equivocation", "id " + to_hex(e.id) + " committed with two tuples");
      }
      uint32_t yes = 0;
      auto nv = delivered_.find(at.index);
      if (nv != delivered_.end()) {
        auto votes = nv->second.find({b.view, e.id});
        if (votes != nv->second.end()) {
          for (const auto& [i, vote] : votes->second) {
            if (!vote.conflicted && vote.r && vote.h == e.h && vote.delta == e.delta) ++yes;
          }
        }
      }
      if (yes < quorum) {
        violate("quorum-safety", "node " + std::to_string(at.index) + " committed id " + to_hex(e.id) +
                                     " with " + std::to_string(yes) + " matching votes, needs " +
                                     std::to_string(quorum));
      }
    }
    chains_[at.index].emplace_back(std::move(b), line_);
  }

  size_t line_ = 0;
  uint32_t n_ = 0;
  std::optional<crypto::BilinearGroup> group_;
  CheckReport report_;
  std::map<std::string, CheckResult> failures_;
  std::map<uint64_t, SendRec> sends_;
  std::set<uint32_t> crashed_;
  std::map<MessageId, Bytes> pk_bytes_;
  // node -> (view, id) -> sender -> vote
  std::map<uint32_t, std::map<std::pair<uint64_t, MessageId>, std::map<uint32_t, VoteRec>>> delivered_;
  std::map<std::tuple<MessageId, Digest, Bytes>, bool> verified_;
  std::map<uint64_t, Digest> height_hash_;
  std::map<MessageId, std::pair<Digest, Bytes>> committed_tuple_;
  std::map<uint32_t, std::vector<std::pair<protocol::Block, size_t>>> chains_;
};

}  // namespace

CheckReport check_trace_lines(const std::vector<std::string>& lines) {
  Checker c;
  for (size_t i = 0; i < lines.size(); ++i) c.feed(i + 1, lines[i]);
  return c.finish();
}

CheckReport check_trace(std::istream& in) {
  Checker c;
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) c.feed(++n, line);
  return c.finish();
}

}  // namespace pcft::sim
