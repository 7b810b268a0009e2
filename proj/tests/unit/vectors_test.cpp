//------------------------------------------------------------------------------
//
//   Copyright 2026 The WDApp Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Golden vectors produced by tests/oracles/gen_vectors.py.

#include "wdapp/ledger.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace wdapp::ledger {
namespace {

TEST(TxVectors, EncodingDigestAndHash) {
  const auto vectors = testing::load_vectors("transactions.json");
  ASSERT_EQ(vectors.size(), 14u);
  for (const auto& v : vectors) {
    SCOPED_TRACE(v["name"].get<std::string>());
    const auto tx = tx_from_json(v["tx"]);
    EXPECT_EQ(canonical_encode(tx_to_json(tx)), v["canonical"]);
    EXPECT_EQ(signing_digest(tx).hex(), v["signing_digest"]);
    EXPECT_EQ(tx_hash(tx).hex(), v["tx_hash"]);

    // Re-signing from the seed reproduces the frozen signature.
    const auto seed = *parse_hex(v["seed"].get<std::string>());
    auto resigned = tx;
    resigned.signature = {};
    sign_transaction(resigned, generate_keypair(seed).private_key);
    EXPECT_EQ(resigned.signature, tx.signature);
  }
}

TEST(TxVectors, MethodNamesCovered) {
  std::set<std::string> methods;
  for (const auto& v : testing::load_vectors("transactions.json")) {
    const auto& action = v["tx"]["action"];
    if (action["type"] == "token_call") methods.insert(action["call"]["method"].get<std::string>());
  }
  EXPECT_EQ(methods.size(), 11u);
}

TEST(LedgerVectors, Merkle) {
  for (const auto& v : testing::load_vectors("ledger.json")["merkle"]) {
    std::vector<Digest32> leaves;
    for (const auto& h : v["leaves"]) leaves.push_back(Digest32::must_from_hex(h.get<std::string>()));
    EXPECT_EQ(compute_merkle_root(leaves).hex(), v["root"]);
  }
}

TEST(LedgerVectors, ContractAddress) {
  for (const auto& v : testing::load_vectors("ledger.json")["contract_address"]) {
    EXPECT_EQ(token::contract_address(Address::must_from_hex(v["deployer"].get<std::string>()),
                                      v["nonce"].get<std::uint64_t>())
                  .hex(),
              v["address"]);
  }
}

TEST(LedgerVectors, Genesis) {
  const auto v = testing::load_vectors("ledger.json")["genesis"];
  const auto config = genesis_from_json(v["config"]);
  const auto [block, state] = create_genesis(config);
  EXPECT_EQ(header_hash(block.header).hex(), v["header_hash"]);
  EXPECT_EQ(state_digest(state).hex(), v["state_digest"]);
}

TEST(LedgerVectors, BlockApplication) {
  const auto vectors = testing::load_vectors("ledger.json");
  ChainStore store(genesis_from_json(vectors["genesis"]["config"]));
  const auto& v = vectors["block"];
  const auto block = block_from_json(v["block"]);
  EXPECT_EQ(header_hash(block.header).hex(), v["header_hash"]);
  auto err = store.append(block);
  ASSERT_FALSE(err) << err->describe();
  EXPECT_EQ(state_digest(store.state()).hex(), v["state_digest"]);
  for (const auto& r : v["receipts"]) {
    const auto* receipt = store.find_receipt(Digest32::must_from_hex(r["tx_hash"].get<std::string>()));
    ASSERT_NE(receipt, nullptr);
    EXPECT_EQ(canonical_encode(receipt_to_json(*receipt)), canonical_encode(r));
  }
}

}  // namespace
}  // namespace wdapp::ledger
