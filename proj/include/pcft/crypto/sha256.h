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

#ifndef PCFT_CRYPTO_SHA256_H_
#define PCFT_CRYPTO_SHA256_H_

#include <memory>

#include "pcft/common/bytes.h"

namespace pcft::crypto {

// Incremental SHA-256 backed by OpenSSL's EVP interface.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& update(ByteSpan data);
  Digest finish();

 private:
  struct Ctx;
  std::unique_ptr<Ctx> ctx_;
};

// Plain SHA-256; accepts empty input.
Digest sha256(ByteSpan data);

// The protocol's message digest h = SHA-256(m). Throws Error(kEmptyMessage)
// for an empty message.
Digest hash_to_digest(ByteSpan message);

}  // namespace pcft::crypto

#endif  // PCFT_CRYPTO_SHA256_H_
