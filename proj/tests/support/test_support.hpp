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

#include "wdapp/crypto.hpp"
#include "wdapp/ledger.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace wdapp::testing {

inline KeyPair keys_for(const std::string& label) {
  const auto seed = hash_bytes(label);
  return generate_keypair(std::span<const std::uint8_t>(seed.bytes));
}

inline Address address_for(const std::string& label) { return derive_address(keys_for(label).public_key); }

inline ledger::Transaction signed_tx(const KeyPair& keys, std::uint64_t chain_id, std::uint64_t nonce,
                                     ledger::Action action, u256 gas_price = 1,
                                     std::optional<std::uint64_t> gas_limit = std::nullopt) {
  ledger::Transaction tx;
  tx.chain_id = chain_id;
  tx.from = derive_address(keys.public_key);
  tx.nonce = nonce;
  tx.action = std::move(action);
  tx.gas_limit = gas_limit.value_or(ledger::gas_cost(tx.action));
  tx.gas_price = gas_price;
  ledger::sign_transaction(tx, keys.private_key);
  return tx;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("wdapp-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
}

inline json load_vectors(const std::string& name) {
  std::ifstream in(std::filesystem::path(WDAPP_VECTORS_DIR) / name);
  return json::parse(in);
}

}  // namespace wdapp::testing
