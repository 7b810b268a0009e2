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

#include "wdapp/http_server.hpp"
#include "wdapp/node.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <thread>

namespace wdapp::node {
namespace {

using testing::keys_for;

struct NodeFixture {
  testing::TempDir dir;
  NodeConfig config;
  std::unique_ptr<Node> node;
  KeyPair a = keys_for("A"), b = keys_for("B");
  Address A = derive_address(a.public_key), B = derive_address(b.public_key);

  explicit NodeFixture(bool auto_mine = false) {
    config.chain_id = 11;
    config.difficulty = 4;
    config.journal = dir / "journal.jsonl";
    config.auto_mine = auto_mine;
    config.auto_mine_interval_ms = 20;
    config.faucet_grant = 1000000000;
    node = std::make_unique<Node>(config, [] { return std::uint64_t{1700000000}; });
  }

  Response fund(const KeyPair& k) {
    return node->faucet(json{{"to", derive_address(k.public_key).hex()}, {"public_key", k.public_key.hex()}}.dump());
  }

  Response send(const KeyPair& k, ledger::Action action, std::optional<std::uint64_t> nonce = std::nullopt) {
    const Address from = derive_address(k.public_key);
    const auto n = nonce.value_or(node->account(from.hex()).body["pending_nonce"].get<std::uint64_t>());
    const auto tx = testing::signed_tx(k, config.chain_id, n, std::move(action));
    return node->submit(canonical_encode(ledger::tx_to_json(tx)));
  }
};

TEST(NodeConfig, Validation) {
  NodeConfig c;
  c.difficulty = 33;
  EXPECT_THROW(c.validate(), ConfigError);
  c.difficulty = 8;
  c.faucet_grant = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(config_from_json(json{{"difficulty", 40}}), ConfigError);
  EXPECT_THROW(config_from_json(json::array()), ConfigError);
  const auto parsed = config_from_json(json{{"port", 9000}, {"faucet_grant", "77"}, {"auto_mine", true}});
  EXPECT_EQ(parsed.port, 9000);
  EXPECT_EQ(parsed.faucet_grant, 77);
  EXPECT_TRUE(parsed.auto_mine);
}

TEST(Node, FreshStart) {
  NodeFixture f;
  EXPECT_EQ(f.node->height(), 0u);
  const auto block = f.node->get_block("0");
  EXPECT_EQ(block.status, 200);
  EXPECT_EQ(block.body["header"]["number"], 0);
  const auto head = f.node->chain_head();
  EXPECT_EQ(head.body["height"], 0);
  EXPECT_EQ(head.body["difficulty"], 4);
  EXPECT_EQ(head.body["head_hash"], block.body["hash"]);
}

TEST(Node, Faucet) {
  NodeFixture f;
  auto r = f.fund(f.a);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["balance"], "1000000000");
  r = f.fund(f.a);
  EXPECT_EQ(r.body["balance"], "2000000000");
  r = f.node->faucet(json{{"to", f.A.hex()}, {"public_key", f.b.public_key.hex()}}.dump());
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"], "KeyMismatch");
  EXPECT_EQ(f.node->faucet("{\"to\":").status, 422);
  EXPECT_EQ(f.node->faucet(json{{"to", "0x12"}}.dump()).status, 422);
}

TEST(Node, SubmitMineAndQuery) {
  NodeFixture f;
  f.fund(f.a);
  auto r = f.send(f.a, ledger::NativeTransfer{f.B, 5});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  const std::string hash = r.body["tx_hash"];
  EXPECT_EQ(hash.size(), 66u);
  EXPECT_EQ(f.node->get_tx(hash).body["status"], "Pending");
  EXPECT_EQ(f.node->mempool_size(), 1u);

  auto stale = f.send(f.a, ledger::NativeTransfer{f.B, 5}, 0);
  EXPECT_EQ(stale.status, 400);
  EXPECT_EQ(stale.body["error"], "MempoolDuplicate");

  const auto mined = f.node->mine(json{{"count", 1}}.dump());
  ASSERT_EQ(mined.status, 200);
  EXPECT_EQ(mined.body[0]["number"], 1);
  EXPECT_EQ(mined.body[0]["tx_count"], 1);
  const auto receipt = f.node->get_tx(hash);
  EXPECT_EQ(receipt.body["status"], "Success");
  EXPECT_EQ(receipt.body["block_number"], 1);

  stale = f.send(f.a, ledger::NativeTransfer{f.B, 5}, 0);
  EXPECT_EQ(stale.body["error"], "BadNonce");
  EXPECT_EQ(f.node->submit("{\"chain_id\":").status, 422);

  const auto acct = f.node->account(f.B.hex());
  EXPECT_EQ(acct.body["native_balance"], "5");
  EXPECT_EQ(f.node->account(testing::address_for("Z").hex()).body["nonce"], 0);

  EXPECT_EQ(f.node->get_block("999999").status, 404);
  EXPECT_EQ(f.node->get_block("999999").body["error"], "NotFound");
  EXPECT_EQ(f.node->get_block(mined.body[0]["hash"].get<std::string>()).body["tx_hashes"][0], hash);
  EXPECT_EQ(f.node->get_tx(hash_bytes("x").hex()).status, 404);
  EXPECT_EQ(f.node->get_tx("0xzz").status, 400);
}

TEST(Node, MineRules) {
  NodeFixture f;
  EXPECT_EQ(f.node->mine(json{{"count", 0}}.dump()).status, 400);
  EXPECT_EQ(f.node->mine(json{{"count", -1}}.dump()).status, 400);
  EXPECT_EQ(f.node->mine(json{{"count", "2"}}.dump()).status, 400);
  const auto r = f.node->mine(json{{"count", 3}}.dump());
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body.size(), 3u);
  EXPECT_EQ(f.node->height(), 3u);
  for (const auto& s : r.body)
    EXPECT_TRUE(meets_difficulty(Digest32::must_from_hex(s["hash"].get<std::string>()), 4));
}

TEST(Node, TokenViews) {
  NodeFixture f;
  f.fund(f.a);
  f.send(f.a, ledger::DeployFungible{"ProjCoin", "PBJ", 18, 1000});
  f.send(f.a, ledger::DeployNft{"DeedRegistry", "DEED"});
  f.node->mine("{}");
  const auto coin = token::contract_address(f.A, 0);
  const auto deeds = token::contract_address(f.A, 1);
  f.send(f.a, ledger::TokenCallAction{coin, token::FtApprove{f.B, 9}});
  f.send(f.a, ledger::TokenCallAction{deeds, token::NftMint{f.B, 7, "ipfs://seven"}});
  f.node->mine("{}");

  const auto meta = f.node->token_meta(coin.hex());
  EXPECT_EQ(meta.body["name"], "ProjCoin");
  EXPECT_EQ(meta.body["symbol"], "PBJ");
  EXPECT_EQ(meta.body["kind"], "ft");
  EXPECT_EQ(meta.body["total_supply"], "1000");
  EXPECT_EQ(meta.body["owner"], f.A.hex());
  EXPECT_EQ(f.node->token_meta(deeds.hex()).body["kind"], "nft");
  EXPECT_EQ(f.node->token_balance(coin.hex(), f.A.hex()).body["balance"], "1000");
  EXPECT_EQ(f.node->token_allowance(coin.hex(), f.A.hex(), f.B.hex()).body["allowance"], "9");
  const auto nft = f.node->token_nft(deeds.hex(), "7");
  EXPECT_EQ(nft.body["owner"], f.B.hex());
  EXPECT_EQ(nft.body["uri"], "ipfs://seven");
  EXPECT_TRUE(nft.body["approved"].is_null());
  EXPECT_EQ(f.node->token_nft(deeds.hex(), "8").status, 404);
  EXPECT_EQ(f.node->token_balance(deeds.hex(), f.A.hex()).status, 400);
  EXPECT_EQ(f.node->token_meta(testing::address_for("nope").hex()).status, 404);
}

TEST(Node, RestartReproducesHead) {
  NodeFixture f;
  f.fund(f.a);
  f.send(f.a, ledger::NativeTransfer{f.B, 5});
  f.node->mine(json{{"count", 2}}.dump());
  const auto head = f.node->head_hash();
  const auto digest = f.node->state_digest();
  f.node.reset();
  Node again(f.config);
  EXPECT_EQ(again.head_hash(), head);
  EXPECT_EQ(again.state_digest(), digest);
  EXPECT_EQ(again.height(), 2u);
}

TEST(Node, TamperedJournalRefusesStart) {
  NodeFixture f;
  f.fund(f.a);
  f.node.reset();
  auto text = testing::read_file(f.config.journal);
  const auto pos = text.find("\"amount\":\"1") + 11;
  text[pos] = '2';
  testing::write_file(f.config.journal, text);
  try {
    Node again(f.config);
    FAIL() << "expected TamperedJournal";
  } catch (const journal::TamperedJournal& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Node, AutoMine) {
  NodeFixture f(true);
  EXPECT_EQ(f.node->mine("{}").status, 409);
  f.fund(f.a);
  const std::string hash = f.send(f.a, ledger::NativeTransfer{f.B, 5}).body["tx_hash"];
  for (int i = 0; i < 200 && f.node->get_tx(hash).body["status"] == "Pending"; ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  EXPECT_EQ(f.node->get_tx(hash).body["status"], "Success");
  EXPECT_GE(f.node->height(), 1u);
  f.node->stop_auto_mine();
}

TEST(Node, AutoMineUnderConcurrentSubmits) {
  NodeFixture f(true);
  f.fund(f.a);
  f.fund(f.b);
  std::vector<std::string> hashes;
  std::mutex m;
  auto worker = [&](const KeyPair& k) {
    for (int i = 0; i < 15; ++i) {
      auto r = f.send(k, ledger::NativeTransfer{testing::address_for("sink"), 1});
      if (r.status == 200) {
        std::lock_guard lock(m);
        hashes.push_back(r.body["tx_hash"]);
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(3));
    }
  };
  std::thread t1(worker, f.a), t2(worker, f.b);
  t1.join();
  t2.join();
  EXPECT_EQ(hashes.size(), 30u);
  for (int i = 0; i < 500 && f.node->mempool_size() > 0; ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  for (const auto& h : hashes) EXPECT_EQ(f.node->get_tx(h).body["status"], "Success") << h;
  f.node->stop_auto_mine();
  const auto head = f.node->head_hash();
  f.node.reset();
  EXPECT_EQ(Node(f.config).head_hash(), head);
}

TEST(Http, RoundTrip) {
  NodeFixture f;
  HttpServer server(*f.node, "*");
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread serve([&] { server.listen_after_bind(); });

  httplib::Client client("127.0.0.1", port);
  auto head = client.Get("/chain/head");
  ASSERT_TRUE(head);
  EXPECT_EQ(head->status, 200);
  EXPECT_EQ(head->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_EQ(json::parse(head->body)["height"], 0);

  auto fund = client.Post("/faucet", json{{"to", f.A.hex()}, {"public_key", f.a.public_key.hex()}}.dump(),
                          "application/json");
  ASSERT_TRUE(fund);
  EXPECT_EQ(fund->status, 200);

  const auto tx = testing::signed_tx(f.a, 11, 0, ledger::NativeTransfer{f.B, 3});
  auto sub = client.Post("/tx", canonical_encode(ledger::tx_to_json(tx)), "application/json");
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->status, 200);
  EXPECT_EQ(json::parse(sub->body)["tx_hash"], ledger::tx_hash(tx).hex());

  auto bad = client.Post("/tx", "{", "application/json");
  EXPECT_EQ(bad->status, 422);
  auto mined = client.Post("/mine", "{\"count\":1}", "application/json");
  EXPECT_EQ(mined->status, 200);
  EXPECT_EQ(json::parse(client.Get("/tx/" + ledger::tx_hash(tx).hex())->body)["status"], "Success");
  EXPECT_EQ(client.Get("/block/1")->status, 200);
  EXPECT_EQ(json::parse(client.Get("/account/" + f.B.hex())->body)["native_balance"], "3");
  EXPECT_EQ(client.Get("/block/99")->status, 404);
  auto unknown = client.Get("/nowhere");
  EXPECT_EQ(unknown->status, 404);
  EXPECT_EQ(json::parse(unknown->body)["error"], "NotFound");
  auto preflight = client.Options("/tx");
  EXPECT_EQ(preflight->status, 204);

  server.stop();
  serve.join();
}

}  // namespace
}  // namespace wdapp::node
