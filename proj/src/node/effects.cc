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

#include "pcft/node/effects.h"

namespace pcft::node {

std::string address_name(const Address& a) {
  switch (a.role) {
    case Role::kNode: return "node:" + std::to_string(a.index);
    case Role::kClient: return "client:" + std::to_string(a.index);
    case Role::kCa: return "ca";
  }
  return "?";
}

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::kCommit: return "commit";
    case EventKind::kRejected: return "rejected";
    case EventKind::kStaleView: return "stale_view";
    case EventKind::kInconsistentVerify: return "inconsistent_verify";
    case EventKind::kEquivocation: return "equivocation";
    case EventKind::kViewChangeStarted: return "view_change_started";
    case EventKind::kViewChangeAck: return "view_change_ack";
    case EventKind::kViewAdopted: return "view_adopted";
    case EventKind::kDroppedMessage: return "dropped";
    case EventKind::kRequestComplete: return "request_complete";
    case EventKind::kUnknownId: return "unknown_id";
  }
  return "?";
}

}  // namespace pcft::node
