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

#pragma once

// The single authoritative node: chain store, mempool and journal behind one
// writer lock, plus the request handlers the HTTP layer routes to.

#include "wdapp/journal.hpp"
#include "wdapp/ledger.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>

namespace wdapp::node {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NodeConfig {
  std::uint64_t chain_id = 1;
  unsigned difficulty = 12;
  std::string host = "127.0.0.1";
  std::uint16_t port = 8545;
  std::filesystem::path journal = "wdapp-journal.jsonl";
  bool auto_mine = false;
  std::uint64_t auto_mine_interval_ms = 1000;
  u256 faucet_grant = u256("1000000000000000000");
  /// Value of Access-Control-Allow-Origin; empty disables CORS headers.
  std::string cors_origin = "*";

  /// Throws ConfigError.
  void validate() const;
};

/// Reads the keys of NodeConfig from a JSON object; absent keys keep their
/// defaults. Throws ConfigError.
NodeConfig config_from_json(const json& j, NodeConfig base = {});

struct Response {
  int status = 200;
  json body;
};

class Node {
 public:
  using Clock = std::function<std::uint64_t()>;

  /// Replays or creates the journal. Throws journal::TamperedJournal,
  /// journal::JournalError or ConfigError. Starts the background miner when
  /// config.auto_mine is set.
  explicit Node(NodeConfig config, Clock clock = {});
  ~Node();
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  // Route handlers. Bodies are raw request text.
  Response faucet(const std::string& body);
  Response submit(const std::string& body);
  Response get_tx(std::string_view hash) const;
  Response get_block(std::string_view id) const;
  Response chain_head() const;
  Response account(std::string_view address) const;
  Response token_meta(std::string_view contract) const;
  Response token_balance(std::string_view contract, std::string_view address) const;
  Response token_allowance(std::string_view contract, std::string_view owner, std::string_view spender) const;
  Response token_nft(std::string_view contract, std::string_view token_id) const;
  Response mine(const std::string& body);

  /// Mines `count` blocks synchronously and returns their summaries.
  json mine_blocks(std::uint64_t count);

  const NodeConfig& config() const { return config_; }
  Digest32 head_hash() const;
  Digest32 state_digest() const;
  std::uint64_t height() const;
  std::size_t mempool_size() const;
  /// Copy of the current state, taken under the read lock.
  ledger::ChainState state_snapshot() const;

  void stop_auto_mine();

 private:
  Node(NodeConfig config, Clock clock, std::pair<journal::Journal, ledger::ChainStore> opened);

  json commit_block(const ledger::Block& block);  // caller holds the write lock
  std::uint64_t now() const;
  void auto_mine_loop(std::stop_token stop);

  NodeConfig config_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
  journal::Journal journal_;
  ledger::ChainStore store_;
  ledger::Mempool mempool_;
  std::atomic<std::uint64_t> submissions_{0};

  std::mutex wake_mutex_;
  std::condition_variable_any wake_;
  std::jthread miner_;
};

}  // namespace wdapp::node
