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

#include "pcft/protocol/ledger.h"

#include "pcft/common/error.h"
#include "pcft/crypto/sha256.h"

namespace pcft::protocol {

Bytes canonical_block_bytes(const Block& b) {
  Bytes out;
  append_u64_be(out, b.height);
  append(out, b.prev_hash);
  append_u64_be(out, b.view);
  append_u32_be(out, static_cast<uint32_t>(b.entries.size()));
  for (const Entry& e : b.entries) {
    append(out, e.id);
    append(out, e.h);
    append_u32_be(out, static_cast<uint32_t>(e.delta.size()));
    append(out, e.delta);
  }
  return out;
}

Digest compute_block_hash(const Block& b) {
  return crypto::sha256(canonical_block_bytes(b));
}

Block genesis_block() {
  Block g;
  g.block_hash = compute_block_hash(g);
  return g;
}

Ledger::Ledger() { blocks_.push_back(genesis_block()); }

Ledger Ledger::from_blocks(std::vector<Block> blocks) {
  Ledger l;
  l.blocks_ = std::move(blocks);
  l.ids_.clear();
  for (const Block& b : l.blocks_) {
    for (const Entry& e : b.entries) l.ids_.insert(key(e.id));
  }
  return l;
}

const Block* Ledger::find(const MessageId& id) const {
  if (!contains(id)) return nullptr;
  for (const Block& b : blocks_) {
    for (const Entry& e : b.entries) {
      if (e.id == id) return &b;
    }
  }
  return nullptr;
}

void Ledger::append(Block b) {
  if (b.height != tip().height + 1 || b.prev_hash != tip().block_hash) {
    throw Error(ErrorCode::kConfigError, "block does not extend the tip");
  }
  std::unordered_set<std::string> seen;
  for (const Entry& e : b.entries) {
    if (contains(e.id) || !seen.insert(key(e.id)).second) {
      throw Error(ErrorCode::kDuplicateId, message_id_hex(e.id));
    }
  }
  ids_.merge(seen);
  blocks_.push_back(std::move(b));
}

Block build_block(const std::vector<Entry>& pending, const Block& prev,
                  View view, const Ledger& chain) {
  if (pending.empty()) throw Error(ErrorCode::kEmptyBatch, "no pending entries");
  std::unordered_set<std::string> seen;
  for (const Entry& e : pending) {
    std::string k(e.id.begin(), e.id.end());
    if (chain.contains(e.id) || !seen.insert(k).second) {
      throw Error(ErrorCode::kDuplicateId, message_id_hex(e.id));
    }
  }
  Block b;
  b.height = prev.height + 1;
  b.prev_hash = prev.block_hash;
  b.view = view;
  b.entries = pending;
  b.block_hash = compute_block_hash(b);
  return b;
}

ChainReport validate_chain(const Ledger& ledger) {
  auto fail = [](uint64_t at, std::string why) {
    return ChainReport{false, at, std::move(why)};
  };
  const std::vector<Block>& blocks = ledger.blocks();
  if (blocks.empty()) return fail(0, "missing genesis block");
  std::unordered_set<std::string> ids;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (b.height != i) return fail(i, "height out of sequence");
    Digest expected_prev = i == 0 ? Digest{} : blocks[i - 1].block_hash;
    if (b.prev_hash != expected_prev) return fail(i, "prev_hash does not link");
    if (compute_block_hash(b) != b.block_hash) return fail(i, "block_hash mismatch");
    for (const Entry& e : b.entries) {
      if (!ids.insert(std::string(e.id.begin(), e.id.end())).second) {
        return fail(i, "duplicate entry id " + message_id_hex(e.id));
      }
    }
  }
  return ChainReport{};
}

}  // namespace pcft::protocol
