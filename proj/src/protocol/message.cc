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

#include "pcft/protocol/message.h"

#include <algorithm>

#include "pcft/common/error.h"

namespace pcft::protocol {

namespace {

class Writer {
 public:
  explicit Writer(MessageKind kind) { out_.push_back(static_cast<uint8_t>(kind)); }

  Writer& fixed(ByteSpan b) {
    append(out_, b);
    return *this;
  }
  Writer& var(ByteSpan b) {
    append_u32_be(out_, static_cast<uint32_t>(b.size()));
    append(out_, b);
    return *this;
  }
  Writer& u64(uint64_t v) {
    append_u64_be(out_, v);
    return *this;
  }
  Writer& u32(uint32_t v) {
    append_u32_be(out_, v);
    return *this;
  }
  Writer& flag(bool b) {
    out_.push_back(b ? 1 : 0);
    return *this;
  }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  Reader(ByteSpan in, size_t start) : in_(in), pos_(start) {}

  size_t pos() const { return pos_; }

  template <size_t N>
  std::array<uint8_t, N> fixed() {
    need(N);
    std::array<uint8_t, N> out;
    std::copy_n(in_.begin() + pos_, N, out.begin());
    pos_ += N;
    return out;
  }
  Bytes var() {
    size_t at = pos_;
    uint32_t len = u32();
    if (len > in_.size() - pos_) {
      throw DecodeError(at, "length prefix exceeds remaining input");
    }
    Bytes out(in_.begin() + pos_, in_.begin() + pos_ + len);
    pos_ += len;
    return out;
  }
  uint64_t u64() {
    need(8);
    uint64_t v = load_u64_be(in_.data() + pos_);
    pos_ += 8;
    return v;
  }
  uint32_t u32() {
    need(4);
    uint32_t v = load_u32_be(in_.data() + pos_);
    pos_ += 4;
    return v;
  }
  bool flag() {
    need(1);
    uint8_t b = in_[pos_];
    if (b > 1) throw DecodeError(pos_, "boolean must be 0 or 1");
    ++pos_;
    return b == 1;
  }
  void finish() const {
    if (pos_ != in_.size()) throw DecodeError(pos_, "trailing bytes");
  }

 private:
  void need(size_t n) const {
    if (in_.size() - pos_ < n) throw DecodeError(in_.size(), "truncated message");
  }

  ByteSpan in_;
  size_t pos_;
};

struct Encoder {
  Bytes operator()(const Setup& m) const {
    return Writer(MessageKind::kSetup).fixed(m.id).fixed(m.sk).take();
  }
  Bytes operator()(const SetupPrime& m) const {
    return Writer(MessageKind::kSetupPrime).fixed(m.id).var(m.pk).take();
  }
  Bytes operator()(const Request& m) const {
    return Writer(MessageKind::kRequest).fixed(m.id).fixed(m.h).var(m.delta).take();
  }
  Bytes operator()(const Forward& m) const {
    return Writer(MessageKind::kForward)
        .fixed(m.id).fixed(m.h).var(m.delta).u64(m.v).take();
  }
  Bytes operator()(const Verify& m) const {
    return Writer(MessageKind::kVerify)
        .fixed(m.id).fixed(m.h).var(m.delta).u64(m.v).u32(m.i).flag(m.r)
        .take();
  }
  Bytes operator()(const Finish& m) const {
    return Writer(MessageKind::kFinish)
        .fixed(m.id).u64(m.v).fixed(m.block_hash).take();
  }
  Bytes operator()(const ViewChange& m) const {
    return Writer(MessageKind::kViewChange).u64(m.v_new).u32(m.i).take();
  }
  Bytes operator()(const ViewChangeAck& m) const {
    return Writer(MessageKind::kViewChangeAck).u64(m.v_new).u32(m.i).take();
  }
  Bytes operator()(const Ping& m) const {
    return Writer(MessageKind::kPing).u64(m.v).u32(m.i).take();
  }
  Bytes operator()(const Pong& m) const {
    return Writer(MessageKind::kPong).u64(m.v).u32(m.i).take();
  }
};

}  // namespace

MessageId make_message_id(uint32_t client, uint64_t seq) {
  Bytes b;
  append_u32_be(b, client);
  append_u64_be(b, seq);
  MessageId id{};
  std::copy(b.begin(), b.end(), id.begin());
  return id;
}

uint32_t message_id_client(const MessageId& id) { return load_u32_be(id.data()); }

std::string message_id_hex(const MessageId& id) { return to_hex(id); }

MessageKind kind_of(const ConsensusMessage& msg) {
  return static_cast<MessageKind>(msg.index() + 1);
}

const char* kind_name(MessageKind kind) {
  switch (kind) {
    case MessageKind::kSetup: return "SETUP";
    case MessageKind::kSetupPrime: return "SETUP_PRIME";
    case MessageKind::kRequest: return "REQUEST";
    case MessageKind::kForward: return "FORWARD";
    case MessageKind::kVerify: return "VERIFY";
    case MessageKind::kFinish: return "FINISH";
    case MessageKind::kViewChange: return "VIEWCHANGE";
    case MessageKind::kViewChangeAck: return "VIEWCHANGE_ACK";
    case MessageKind::kPing: return "PING";
    case MessageKind::kPong: return "PONG";
  }
  return "UNKNOWN";
}

MessageKind kind_from_name(std::string_view name) {
  for (MessageKind k : kAllKinds) {
    if (name == kind_name(k)) return k;
  }
  throw Error(ErrorCode::kParseError, "unknown message kind " + std::string(name));
}

bool is_consensus_kind(MessageKind kind) {
  return kind != MessageKind::kPing && kind != MessageKind::kPong;
}

Bytes encode(const ConsensusMessage& msg) { return std::visit(Encoder{}, msg); }

ConsensusMessage decode(ByteSpan bytes) {
  if (bytes.empty()) throw DecodeError(0, "empty message");
  Reader r(bytes, 1);
  ConsensusMessage out;
  switch (bytes[0]) {
    case static_cast<uint8_t>(MessageKind::kSetup): {
      Setup m;
      m.id = r.fixed<16>();
      m.sk = r.fixed<32>();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kSetupPrime): {
      SetupPrime m;
      m.id = r.fixed<16>();
      m.pk = r.var();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kRequest): {
      Request m;
      m.id = r.fixed<16>();
      m.h = r.fixed<32>();
      m.delta = r.var();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kForward): {
      Forward m;
      m.id = r.fixed<16>();
      m.h = r.fixed<32>();
      m.delta = r.var();
      m.v = r.u64();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kVerify): {
      Verify m;
      m.id = r.fixed<16>();
      m.h = r.fixed<32>();
      m.delta = r.var();
      m.v = r.u64();
      m.i = r.u32();
      m.r = r.flag();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kFinish): {
      Finish m;
      m.id = r.fixed<16>();
      m.v = r.u64();
      m.block_hash = r.fixed<32>();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kViewChange): {
      ViewChange m;
      m.v_new = r.u64();
      m.i = r.u32();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kViewChangeAck): {
      ViewChangeAck m;
      m.v_new = r.u64();
      m.i = r.u32();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kPing): {
      Ping m;
      m.v = r.u64();
      m.i = r.u32();
      out = m;
      break;
    }
    case static_cast<uint8_t>(MessageKind::kPong): {
      Pong m;
      m.v = r.u64();
      m.i = r.u32();
      out = m;
      break;
    }
    default:
      throw DecodeError(0, "unknown message kind");
  }
  r.finish();
  return out;
}

}  // namespace pcft::protocol
