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

#ifndef PCFT_NODE_CA_H_
#define PCFT_NODE_CA_H_

#include <array>
#include <vector>

#include "pcft/crypto/bilinear_group.h"
#include "pcft/node/effects.h"

namespace pcft::node {

struct ClientIds {
  uint32_t client;
  std::vector<MessageId> ids;
};

// Issues one key pair per identifier. The pair for `id` is
// key_gen(SHA256("pcft/ca" || seed || id)).
class CertificateAuthority {
 public:
  CertificateAuthority(crypto::BilinearGroup group, const std::array<uint8_t, 32>& seed);

  // One SETUP per id to its client and one SETUP_PRIME per id to every node.
  // Throws Error(kDuplicateSetup) on a second call.
  std::vector<Send> setup(const std::vector<ClientIds>& clients, uint32_t n_nodes);

 private:
  crypto::BilinearGroup group_;
  std::array<uint8_t, 32> seed_;
  bool done_ = false;
};

}  // namespace pcft::node

#endif  // PCFT_NODE_CA_H_
