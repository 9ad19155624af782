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

// Blocks, hash links and the append-only chain.

#ifndef PCFT_PROTOCOL_LEDGER_H_
#define PCFT_PROTOCOL_LEDGER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pcft/common/bytes.h"
#include "pcft/protocol/message.h"

namespace pcft::protocol {

struct Entry {
  MessageId id;
  Digest h;
  Bytes delta;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Block {
  uint64_t height = 0;
  Digest prev_hash{};
  View view = 0;
  std::vector<Entry> entries;
  Digest block_hash{};
  friend bool operator==(const Block&, const Block&) = default;
};

// height u64 || prev_hash || view u64 || entry count u32 ||
// per entry: id || h || u32 length || delta.
Bytes canonical_block_bytes(const Block& b);
Digest compute_block_hash(const Block& b);

// Height 0, zero prev_hash, view 0, no entries.
Block genesis_block();

struct ChainReport {
  bool ok = true;
  std::optional<uint64_t> violation_height;  // index into the block list
  std::string reason;
};

class Ledger {
 public:
  // Starts with the genesis block.
  Ledger();

  // No validation; for replaying or inspecting foreign chains.
  static Ledger from_blocks(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& tip() const { return blocks_.back(); }
  uint64_t height() const { return tip().height; }
  bool contains(const MessageId& id) const { return ids_.contains(key(id)); }
  // Block holding `id`, or nullptr.
  const Block* find(const MessageId& id) const;

  // Throws Error(kDuplicateId) if an entry id is already present, and
  // Error(kConfigError) if the block does not extend the tip.
  void append(Block b);

 private:
  static std::string key(const MessageId& id) {
    return std::string(id.begin(), id.end());
  }

  std::vector<Block> blocks_;
  std::unordered_set<std::string> ids_;
};

// Throws Error(kEmptyBatch) or Error(kDuplicateId) for repeats inside
// `pending` or against `chain`.
Block build_block(const std::vector<Entry>& pending, const Block& prev,
                  View view, const Ledger& chain);

ChainReport validate_chain(const Ledger& ledger);

}  // namespace pcft::protocol

#endif  // PCFT_PROTOCOL_LEDGER_H_
