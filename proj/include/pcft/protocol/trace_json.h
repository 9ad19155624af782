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

// Human-readable form of a message, one JSON object per message. Byte fields
// are lower-case hex.

#ifndef PCFT_PROTOCOL_TRACE_JSON_H_
#define PCFT_PROTOCOL_TRACE_JSON_H_

#include <nlohmann/json.hpp>

#include "pcft/protocol/message.h"

namespace pcft::protocol {

nlohmann::ordered_json message_to_json(const ConsensusMessage& msg);
// Throws Error(kParseError) on missing or ill-typed fields.
ConsensusMessage message_from_json(const nlohmann::ordered_json& j);

}  // namespace pcft::protocol

#endif  // PCFT_PROTOCOL_TRACE_JSON_H_
