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

#include "pcft/protocol/trace_json.h"

#include <algorithm>

#include "pcft/common/error.h"

namespace pcft::protocol {

using nlohmann::ordered_json;

namespace {

struct ToJson {
  ordered_json operator()(const Setup& m) const {
    return {{"kind", "SETUP"}, {"id", to_hex(m.id)}, {"sk", to_hex(m.sk)}};
  }
  ordered_json operator()(const SetupPrime& m) const {
    return {{"kind", "SETUP_PRIME"}, {"id", to_hex(m.id)}, {"pk", to_hex(m.pk)}};
  }
  ordered_json operator()(const Request& m) const {
    return {{"kind", "REQUEST"},
            {"id", to_hex(m.id)},
            {"h", to_hex(m.h)},
            {"delta", to_hex(m.delta)}};
  }
  ordered_json operator()(const Forward& m) const {
    return {{"kind", "FORWARD"},
            {"id", to_hex(m.id)},
            {"h", to_hex(m.h)},
            {"delta", to_hex(m.delta)},
            {"v", m.v}};
  }
  ordered_json operator()(const Verify& m) const {
    return {{"kind", "VERIFY"},
            {"id", to_hex(m.id)},
            {"h", to_hex(m.h)},
            {"delta", to_hex(m.delta)},
            {"v", m.v},
            {"i", m.i},
            {"r", m.r}};
  }
  ordered_json operator()(const Finish& m) const {
    return {{"kind", "FINISH"},
            {"id", to_hex(m.id)},
            {"v", m.v},
            {"block_hash", to_hex(m.block_hash)}};
  }
  ordered_json operator()(const ViewChange& m) const {
    return {{"kind", "VIEWCHANGE"}, {"v_new", m.v_new}, {"i", m.i}};
  }
  ordered_json operator()(const ViewChangeAck& m) const {
    return {{"kind", "VIEWCHANGE_ACK"}, {"v_new", m.v_new}, {"i", m.i}};
  }
  ordered_json operator()(const Ping& m) const {
    return {{"kind", "PING"}, {"v", m.v}, {"i", m.i}};
  }
  ordered_json operator()(const Pong& m) const {
    return {{"kind", "PONG"}, {"v", m.v}, {"i", m.i}};
  }
};

const ordered_json& field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw Error(ErrorCode::kParseError, std::string("missing field ") + name);
  }
  return *it;
}

Bytes hex_field(const ordered_json& j, const char* name) {
  const ordered_json& f = field(j, name);
  if (!f.is_string()) {
    throw Error(ErrorCode::kParseError, std::string(name) + " must be a string");
  }
  try {
    return from_hex(f.get<std::string>());
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, std::string(name) + " is not hex");
  }
}

template <size_t N>
std::array<uint8_t, N> fixed_field(const ordered_json& j, const char* name) {
  Bytes b = hex_field(j, name);
  if (b.size() != N) {
    throw Error(ErrorCode::kParseError, std::string(name) + " has wrong length");
  }
  std::array<uint8_t, N> out;
  std::copy(b.begin(), b.end(), out.begin());
  return out;
}

template <class T>
T uint_field(const ordered_json& j, const char* name) {
  const ordered_json& f = field(j, name);
  if (!f.is_number_unsigned() || f.get<uint64_t>() > std::numeric_limits<T>::max()) {
    throw Error(ErrorCode::kParseError, std::string(name) + " must be an unsigned integer");
  }
  return static_cast<T>(f.get<uint64_t>());
}

bool bool_field(const ordered_json& j, const char* name) {
  const ordered_json& f = field(j, name);
  if (!f.is_boolean()) {
    throw Error(ErrorCode::kParseError, std::string(name) + " must be a boolean");
  }
  return f.get<bool>();
}

}  // namespace

ordered_json message_to_json(const ConsensusMessage& msg) {
  return std::visit(ToJson{}, msg);
}

ConsensusMessage message_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "message must be an object");
  const ordered_json& k = field(j, "kind");
  if (!k.is_string()) throw Error(ErrorCode::kParseError, "kind must be a string");
  switch (kind_from_name(k.get<std::string>())) {
    case MessageKind::kSetup:
      return Setup{fixed_field<16>(j, "id"), fixed_field<32>(j, "sk")};
    case MessageKind::kSetupPrime:
      return SetupPrime{fixed_field<16>(j, "id"), hex_field(j, "pk")};
    case MessageKind::kRequest:
      return Request{fixed_field<16>(j, "id"), fixed_field<32>(j, "h"),
                     hex_field(j, "delta")};
    case MessageKind::kForward:
      return Forward{fixed_field<16>(j, "id"), fixed_field<32>(j, "h"),
                     hex_field(j, "delta"), uint_field<uint64_t>(j, "v")};
    case MessageKind::kVerify:
      return Verify{fixed_field<16>(j, "id"),     fixed_field<32>(j, "h"),
                    hex_field(j, "delta"),        uint_field<uint64_t>(j, "v"),
                    uint_field<uint32_t>(j, "i"), bool_field(j, "r")};
    case MessageKind::kFinish:
      return Finish{fixed_field<16>(j, "id"), uint_field<uint64_t>(j, "v"),
                    fixed_field<32>(j, "block_hash")};
    case MessageKind::kViewChange:
      return ViewChange{uint_field<uint64_t>(j, "v_new"), uint_field<uint32_t>(j, "i")};
    case MessageKind::kViewChangeAck:
      return ViewChangeAck{uint_field<uint64_t>(j, "v_new"),
                           uint_field<uint32_t>(j, "i")};
    case MessageKind::kPing:
      return Ping{uint_field<uint64_t>(j, "v"), uint_field<uint32_t>(j, "i")};
    case MessageKind::kPong:
      return Pong{uint_field<uint64_t>(j, "v"), uint_field<uint32_t>(j, "i")};
  }
  throw Error(ErrorCode::kParseError, "unreachable message kind");
}

}  // namespace pcft::protocol
