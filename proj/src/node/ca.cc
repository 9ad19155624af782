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

#include "pcft/node/ca.h"

#include "pcft/common/error.h"
#include "pcft/crypto/proof.h"
#include "pcft/crypto/sha256.h"

namespace pcft::node {

CertificateAuthority::CertificateAuthority(crypto::BilinearGroup group,
                                           const std::array<uint8_t, 32>& seed)
    : group_(std::move(group)), seed_(seed) {}

std::vector<Send> CertificateAuthority::setup(const std::vector<ClientIds>& clients,
                                              uint32_t n_nodes) {
  if (done_) throw Error(ErrorCode::kDuplicateSetup, "setup already performed");
  done_ = true;
  std::vector<Send> out;
  for (const ClientIds& c : clients) {
    for (const MessageId& id : c.ids) {
      crypto::Sha256 h;
      h.update(as_span("pcft/ca")).update(seed_).update(id);
      crypto::KeyPair kp = crypto::key_gen(group_, h.finish(), id);
      out.push_back({Address::client(c.client), protocol::Setup{id, kp.sk.encode()}});
      // G2 image only: nodes need pk solely as a pairing partner of h.
      Bytes pk = group_.encode(group_.pairing_partner_form(kp.pk));
      for (uint32_t i = 0; i < n_nodes; ++i) {
        out.push_back({Address::node(i), protocol::SetupPrime{id, pk}});
      }
    }
  }
  return out;
}

}  // namespace pcft::node
