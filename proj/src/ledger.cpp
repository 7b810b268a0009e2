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

#include "wdapp/ledger.hpp"
#include "wdapp/overloaded.hpp"

#include "wire.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace wdapp::ledger {

using namespace wire;

std::string_view to_string(TxError e) {
  static constexpr std::array<std::string_view, 6> names = {
      "BadChainId", "BadSignature", "BadNonce", "InsufficientGasLimit", "InsufficientFunds", "MempoolDuplicate"};
  return names.at(static_cast<std::size_t>(e));
}

std::string_view to_string(BlockErrorCode code) {
  static constexpr std::array<std::string_view, 6> names = {"BadNumber",     "BadParent",      "BadPow",
                                                            "BadMerkleRoot", "BadTransaction", "BlockGasExceeded"};
  return names.at(static_cast<std::size_t>(code));
}

std::string_view to_string(GrantError e) {
  static constexpr std::array<std::string_view, 3> names = {"KeyMismatch", "AddressMismatch", "ArithmeticOverflow"};
  return names.at(static_cast<std::size_t>(e));
}

std::string BlockError::describe() const {
  std::string out(to_string(code));
  if (index) out += " at index " + std::to_string(*index);
  if (cause) out += ": " + std::string(to_string(*cause));
  return out;
}

std::uint64_t gas_cost(const Action& action) {
  return std::visit(Overloaded{
                        [](const NativeTransfer&) { return gas::kNativeTransfer; },
                        [](const DeployFungible&) { return gas::kDeployFungible; },
                        [](const DeployNft&) { return gas::kDeployNft; },
                        [](const TokenCallAction& a) { return token::gas_cost(a.call); },
                    },
                    action);
}

// ---------------------------------------------------------------------------
// Wire forms

json action_to_json(const Action& action) {
  return std::visit(Overloaded{
                        [](const NativeTransfer& a) {
                          return json{{"type", "native_transfer"}, {"to", a.to.hex()}, {"amount", to_decimal(a.amount)}};
                        },
                        [](const DeployFungible& a) {
                          return json{{"type", "deploy_fungible"},
                                      {"name", a.name},
                                      {"symbol", a.symbol},
                                      {"decimals", a.decimals},
                                      {"total_supply", to_decimal(a.total_supply)}};
                        },
                        [](const DeployNft& a) {
                          return json{{"type", "deploy_nft"}, {"name", a.name}, {"symbol", a.symbol}};
                        },
                        [](const TokenCallAction& a) {
                          return json{{"type", "token_call"},
                                      {"contract", a.contract.hex()},
                                      {"call", token::call_to_json(a.call)}};
                        },
                    },
                    action);
}

Action action_from_json(const json& j) {
  const auto type = string_field(j, "type");
  if (type == "native_transfer") return NativeTransfer{address_field(j, "to"), u256_field(j, "amount")};
  if (type == "deploy_fungible") {
    const auto decimals = u64_field(j, "decimals");
    if (decimals > 255) throw DecodeError("field 'decimals' out of range");
    return DeployFungible{string_field(j, "name"), string_field(j, "symbol"), static_cast<unsigned>(decimals),
                          u256_field(j, "total_supply")};
  }
  if (type == "deploy_nft") return DeployNft{string_field(j, "name"), string_field(j, "symbol")};
  if (type == "token_call") return TokenCallAction{address_field(j, "contract"), token::call_from_json(require(j, "call"))};
  throw DecodeError("unknown action type '" + type + "'");
}

json tx_to_json(const Transaction& tx, bool with_signature) {
  json j = {{"chain_id", tx.chain_id},
            {"from", tx.from.hex()},
            {"nonce", tx.nonce},
            {"action", action_to_json(tx.action)},
            {"gas_limit", tx.gas_limit},
            {"gas_price", to_decimal(tx.gas_price)}};
  if (with_signature) j["signature"] = tx.signature.hex();
  return j;
}

Transaction tx_from_json(const json& j) {
  if (!j.is_object()) throw DecodeError("transaction must be a JSON object");
  Transaction tx;
  tx.chain_id = u64_field(j, "chain_id");
  tx.from = address_field(j, "from");
  tx.nonce = u64_field(j, "nonce");
  tx.action = action_from_json(require(j, "action"));
  tx.gas_limit = u64_field(j, "gas_limit");
  tx.gas_price = u256_field(j, "gas_price");
  tx.signature = fixed_field<Signature>(j, "signature");
  return tx;
}

Digest32 signing_digest(const Transaction& tx) { return hash_bytes(canonical_encode(tx_to_json(tx, false))); }

Digest32 tx_hash(const Transaction& tx) { return hash_bytes(canonical_encode(tx_to_json(tx, true))); }

void sign_transaction(Transaction& tx, const PrivateKey& key) { tx.signature = sign_digest(key, signing_digest(tx)); }

json header_to_json(const BlockHeader& h) {
  return json{{"number", h.number},         {"parent_hash", h.parent_hash.hex()}, {"timestamp", h.timestamp},
              {"difficulty", h.difficulty}, {"merkle_root", h.merkle_root.hex()}, {"nonce", h.nonce}};
}

BlockHeader header_from_json(const json& j) {
  BlockHeader h;
  h.number = u64_field(j, "number");
  h.parent_hash = fixed_field<Digest32>(j, "parent_hash");
  h.timestamp = u64_field(j, "timestamp");
  const auto difficulty = u64_field(j, "difficulty");
  if (difficulty > 256) throw DecodeError("field 'difficulty' out of range");
  h.difficulty = static_cast<unsigned>(difficulty);
  h.merkle_root = fixed_field<Digest32>(j, "merkle_root");
  h.nonce = u64_field(j, "nonce");
  return h;
}

json block_to_json(const Block& block) {
  json txs = json::array();
  for (const auto& tx : block.transactions) txs.push_back(tx_to_json(tx));
  return json{{"header", header_to_json(block.header)}, {"transactions", std::move(txs)}};
}

Block block_from_json(const json& j) {
  Block block;
  block.header = header_from_json(require(j, "header"));
  const auto& txs = require(j, "transactions");
  if (!txs.is_array()) throw DecodeError("'transactions' must be an array");
  for (const auto& tx : txs) block.transactions.push_back(tx_from_json(tx));
  return block;
}

Digest32 header_hash(const BlockHeader& header) { return hash_bytes(canonical_encode(header_to_json(header))); }

Digest32 compute_merkle_root(const std::vector<Digest32>& tx_hashes) {
  if (tx_hashes.empty()) return hash_bytes(std::string_view());
  std::vector<Digest32> level = tx_hashes;
  std::array<std::uint8_t, 64> pair{};
  do {
    if (level.size() % 2 == 1) level.push_back(level.back());
    std::vector<Digest32> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) {
      std::copy(level[i].bytes.begin(), level[i].bytes.end(), pair.begin());
      std::copy(level[i + 1].bytes.begin(), level[i + 1].bytes.end(), pair.begin() + 32);
      next.push_back(hash_bytes(pair));
    }
    level = std::move(next);
  } while (level.size() > 1);
  return level.front();
}

Digest32 compute_merkle_root(const std::vector<Transaction>& txs) {
  std::vector<Digest32> hashes;
  hashes.reserve(txs.size());
  for (const auto& tx : txs) hashes.push_back(tx_hash(tx));
  return compute_merkle_root(hashes);
}

json receipt_to_json(const Receipt& r) {
  json j = {{"tx_hash", r.tx_hash.hex()},
            {"status", r.status == ReceiptStatus::Success ? "Success" : "Reverted"},
            {"block_number", r.block_number},
            {"tx_index", r.tx_index},
            {"gas_used", r.gas_used}};
  if (r.error) j["error"] = *r.error;
  if (r.contract_address) j["contract_address"] = r.contract_address->hex();
  return j;
}

json state_to_json(const ChainState& state) {
  json accounts = json::object();
  for (const auto& [addr, acct] : state.accounts) {
    json a = {{"nonce", acct.nonce}, {"native_balance", to_decimal(acct.native_balance)}};
    if (acct.public_key) a["public_key"] = acct.public_key->hex();
    accounts[addr.hex()] = std::move(a);
  }
  json contracts = json::object();
  for (const auto& [addr, token_state] : state.contracts) contracts[addr.hex()] = token::state_to_json(token_state);
  return json{{"chain_id", state.chain_id},
              {"difficulty", state.difficulty},
              {"accounts", std::move(accounts)},
              {"contracts", std::move(contracts)},
              {"head", state.head.hex()},
              {"height", state.height},
              {"total_issued", to_decimal(state.total_issued)},
              {"burned_fees", to_decimal(state.burned_fees)}};
}

Digest32 state_digest(const ChainState& state) { return hash_bytes(canonical_encode(state_to_json(state))); }

json genesis_to_json(const GenesisConfig& config) {
  json allocations = json::object();
  for (const auto& [addr, amount] : config.allocations) allocations[addr.hex()] = to_decimal(amount);
  json keys = json::object();
  for (const auto& [addr, pk] : config.registered_keys) keys[addr.hex()] = pk.hex();
  return json{{"chain_id", config.chain_id},
              {"difficulty", config.difficulty},
              {"allocations", std::move(allocations)},
              {"registered_keys", std::move(keys)}};
}

GenesisConfig genesis_from_json(const json& j) {
  GenesisConfig config;
  config.chain_id = u64_field(j, "chain_id");
  const auto difficulty = u64_field(j, "difficulty");
  if (difficulty > kMaxDifficulty) throw DecodeError("difficulty above " + std::to_string(kMaxDifficulty));
  config.difficulty = static_cast<unsigned>(difficulty);
  const auto& allocations = require(j, "allocations");
  if (!allocations.is_object()) throw DecodeError("'allocations' must be an object");
  for (const auto& [key, value] : allocations.items()) {
    auto addr = Address::from_hex(key);
    if (!addr) throw DecodeError("bad allocation address '" + key + "'");
    config.allocations[*addr] = u256_field(json{{"v", value}}, "v");
  }
  const auto& keys = require(j, "registered_keys");
  if (!keys.is_object()) throw DecodeError("'registered_keys' must be an object");
  for (const auto& [key, value] : keys.items()) {
    auto addr = Address::from_hex(key);
    if (!addr) throw DecodeError("bad registered address '" + key + "'");
    config.registered_keys[*addr] = fixed_field<PublicKey>(json{{"v", value}}, "v");
  }
  return config;
}

// ---------------------------------------------------------------------------
// Genesis and validation

std::pair<Block, ChainState> create_genesis(const GenesisConfig& config) {
  if (config.difficulty > kMaxDifficulty) throw LedgerError("genesis difficulty above 32");
  ChainState state;
  state.chain_id = config.chain_id;
  state.difficulty = config.difficulty;
  for (const auto& [addr, amount] : config.allocations) {
    auto issued = checked_add(state.total_issued, amount);
    if (!issued) throw LedgerError("genesis allocations overflow 256 bits");
    state.total_issued = *issued;
    state.accounts[addr].native_balance = amount;
  }
  for (const auto& [addr, pk] : config.registered_keys) {
    Address derived;
    try {
      derived = derive_address(pk);
    } catch (const KeyError& e) {
      throw LedgerError("genesis key for " + addr.hex() + ": " + e.what());
    }
    if (derived != addr) throw LedgerError("genesis key does not match address " + addr.hex());
    state.accounts[addr].public_key = pk;
  }

  Block genesis;
  genesis.header.difficulty = config.difficulty;
  genesis.header.merkle_root = compute_merkle_root(std::vector<Digest32>{});
  state.head = header_hash(genesis.header);
  state.height = 0;
  return {std::move(genesis), std::move(state)};
}

namespace {

std::optional<u256> upfront_cost(const Transaction& tx) {
  auto cost = checked_mul(tx.gas_limit, tx.gas_price);
  if (!cost) return std::nullopt;
  if (const auto* transfer = std::get_if<NativeTransfer>(&tx.action)) return checked_add(*cost, transfer->amount);
  return cost;
}

}  // namespace

std::optional<TxError> validate_transaction(const ChainState& state, const Transaction& tx, std::uint64_t max_nonce) {
  if (tx.chain_id != state.chain_id) return TxError::BadChainId;
  const Account* acct = state.find_account(tx.from);
  if (acct == nullptr || !acct->public_key) return TxError::BadSignature;
  if (!verify_signature(*acct->public_key, signing_digest(tx), tx.signature)) return TxError::BadSignature;
  if (tx.nonce < acct->nonce || tx.nonce > max_nonce) return TxError::BadNonce;
  if (tx.gas_limit < gas_cost(tx.action)) return TxError::InsufficientGasLimit;
  auto cost = upfront_cost(tx);
  if (!cost || acct->native_balance < *cost) return TxError::InsufficientFunds;
  return std::nullopt;
}

std::optional<TxError> validate_transaction(const ChainState& state, const Transaction& tx) {
  const Account* acct = state.find_account(tx.from);
  return validate_transaction(state, tx, acct ? acct->nonce : 0);
}

// ---------------------------------------------------------------------------
// Mempool

const Transaction* Mempool::find(const Digest32& hash) const {
  auto it = by_hash_.find(hash);
  if (it == by_hash_.end()) return nullptr;
  return &by_key_.at(it->second);
}

std::uint64_t Mempool::pending_nonce(const ChainState& state, const Address& sender) const {
  const Account* acct = state.find_account(sender);
  std::uint64_t nonce = acct ? acct->nonce : 0;
  while (by_key_.contains({sender, nonce})) ++nonce;
  return nonce;
}

std::optional<TxError> Mempool::insert(const Transaction& tx) {
  const Key key{tx.from, tx.nonce};
  auto it = by_key_.find(key);
  if (it != by_key_.end()) {
    if (tx.gas_price <= it->second.gas_price) return TxError::MempoolDuplicate;
    by_hash_.erase(tx_hash(it->second));
    it->second = tx;
  } else {
    by_key_.emplace(key, tx);
  }
  by_hash_[tx_hash(tx)] = key;
  ++generation_;
  return std::nullopt;
}

void Mempool::erase(const Digest32& hash) {
  auto it = by_hash_.find(hash);
  if (it == by_hash_.end()) return;
  by_key_.erase(it->second);
  by_hash_.erase(it);
}

void Mempool::prune(const ChainState& state) {
  std::vector<Digest32> doomed;
  for (const auto& [key, tx] : by_key_) {
    const Account* acct = state.find_account(key.first);
    const std::uint64_t next = acct ? acct->nonce : 0;
    if (key.second < next || (key.second == next && validate_transaction(state, tx)))
      doomed.push_back(tx_hash(tx));
  }
  for (const auto& h : doomed) erase(h);
}

SubmitResult submit_transaction(Mempool& mempool, const ChainState& state, const Transaction& tx) {
  if (auto err = validate_transaction(state, tx, mempool.pending_nonce(state, tx.from))) return {std::nullopt, err};
  if (auto err = mempool.insert(tx)) return {std::nullopt, err};
  return {tx_hash(tx), std::nullopt};
}

// ---------------------------------------------------------------------------
// Execution

Receipt apply_transaction(ChainState& state, const Transaction& tx, std::uint64_t block_number,
                          std::uint64_t tx_index) {
  Receipt receipt;
  receipt.tx_hash = tx_hash(tx);
  receipt.block_number = block_number;
  receipt.tx_index = tx_index;
  receipt.gas_used = gas_cost(tx.action);

  Account& sender = state.accounts[tx.from];
  const u256 escrow = u256(tx.gas_limit) * tx.gas_price;
  sender.native_balance -= escrow;

  token::Outcome outcome = std::visit(
      Overloaded{
          [&](const NativeTransfer& a) -> token::Outcome {
            if (sender.native_balance < a.amount) return token::Revert::InsufficientBalance;
            if (a.to == tx.from) return std::nullopt;
            Account& recipient = state.accounts[a.to];
            auto credited = checked_add(recipient.native_balance, a.amount);
            if (!credited) return token::Revert::ArithmeticOverflow;
            sender.native_balance -= a.amount;
            recipient.native_balance = *credited;
            return std::nullopt;
          },
          [&](const DeployFungible& a) -> token::Outcome {
            if (auto bad = token::check_deploy_fungible(a.name, a.symbol, a.decimals)) return bad;
            const auto addr = token::contract_address(tx.from, tx.nonce);
            state.contracts.insert_or_assign(addr,
                                             token::make_fungible(tx.from, a.name, a.symbol, a.decimals, a.total_supply));
            receipt.contract_address = addr;
            return std::nullopt;
          },
          [&](const DeployNft& a) -> token::Outcome {
            if (auto bad = token::check_deploy_nft(a.name, a.symbol)) return bad;
            const auto addr = token::contract_address(tx.from, tx.nonce);
            state.contracts.insert_or_assign(addr, token::make_nft(tx.from, a.name, a.symbol));
            receipt.contract_address = addr;
            return std::nullopt;
          },
          [&](const TokenCallAction& a) -> token::Outcome {
            auto it = state.contracts.find(a.contract);
            if (it == state.contracts.end()) return token::Revert::NoSuchContract;
            return token::apply_call(it->second, tx.from, a.call);
          },
      },
      tx.action);

  if (outcome) {
    receipt.status = ReceiptStatus::Reverted;
    receipt.error = std::string(token::to_string(*outcome));
  }

  const u256 fee = u256(receipt.gas_used) * tx.gas_price;
  sender.native_balance += escrow - fee;
  state.burned_fees += fee;
  sender.nonce += 1;
  return receipt;
}

namespace {

// Total order for block inclusion among ready transactions.
bool better(const Transaction& a, const Digest32& ha, const Transaction& b, const Digest32& hb) {
  if (a.gas_price != b.gas_price) return a.gas_price > b.gas_price;
  return ha < hb;
}

}  // namespace

Block assemble_block(const ChainState& state, const Mempool& mempool, const BlockHeader& parent, unsigned difficulty,
                     std::uint64_t timestamp) {
  Block block;
  block.header.number = parent.number + 1;
  block.header.parent_hash = header_hash(parent);
  block.header.timestamp = timestamp;
  block.header.difficulty = difficulty;

  // Per-sender queues in nonce order; only the head of each queue is ready.
  std::map<Address, std::vector<const Transaction*>> queues;
  for (const auto& [key, tx] : mempool.entries()) queues[key.first].push_back(&tx);
  std::map<Address, std::size_t> cursor;

  ChainState scratch = state;
  std::uint64_t gas_used = 0;
  std::set<Address> exhausted;

  for (;;) {
    const Transaction* best = nullptr;
    Digest32 best_hash;
    for (const auto& [sender, queue] : queues) {
      if (exhausted.contains(sender)) continue;
      std::size_t& pos = cursor[sender];
      const Account* acct = scratch.find_account(sender);
      const std::uint64_t next = acct ? acct->nonce : 0;
      while (pos < queue.size() && queue[pos]->nonce < next) ++pos;
      if (pos >= queue.size() || queue[pos]->nonce != next) {
        exhausted.insert(sender);
        continue;
      }
      const Transaction* candidate = queue[pos];
      const Digest32 h = tx_hash(*candidate);
      if (best == nullptr || better(*candidate, h, *best, best_hash)) {
        best = candidate;
        best_hash = h;
      }
    }
    if (best == nullptr) break;

    const std::uint64_t cost = gas_cost(best->action);
    if (validate_transaction(scratch, *best) || gas_used + cost > gas::kBlockCap) {
      // Later nonces from this sender cannot be valid in this block either.
      exhausted.insert(best->from);
      continue;
    }
    apply_transaction(scratch, *best, block.header.number, block.transactions.size());
    gas_used += cost;
    block.transactions.push_back(*best);
  }

  block.header.merkle_root = compute_merkle_root(block.transactions);
  return block;
}

bool seal_header(BlockHeader& header, const std::function<bool()>& should_stop) {
  // Encoding split around the nonce field.
  header.nonce = 0;
  const std::string encoded = canonical_encode(header_to_json(header));
  const std::string marker = "\"nonce\":\"0\"";
  const auto at = encoded.find(marker);
  const std::string prefix = encoded.substr(0, at + marker.size() - 2);
  const std::string suffix = encoded.substr(at + marker.size() - 1);

  std::string buffer;
  for (std::uint64_t nonce = 0;; ++nonce) {
    if (should_stop && nonce % 4096 == 0 && should_stop()) return false;
    buffer.assign(prefix);
    buffer += std::to_string(nonce);
    buffer += suffix;
    if (meets_difficulty(hash_bytes(buffer), header.difficulty)) {
      header.nonce = nonce;
      return true;
    }
  }
}

Block mine_block(const ChainState& state, const Mempool& mempool, const BlockHeader& parent, unsigned difficulty,
                 std::uint64_t timestamp) {
  Block block = assemble_block(state, mempool, parent, difficulty, timestamp);
  seal_header(block.header);
  return block;
}

std::optional<BlockError> verify_block(const ChainState& state, const BlockHeader& parent, const Block& block) {
  const auto& h = block.header;
  if (h.number != parent.number + 1) return BlockError{BlockErrorCode::BadNumber, std::nullopt, std::nullopt};
  if (h.parent_hash != header_hash(parent)) return BlockError{BlockErrorCode::BadParent, std::nullopt, std::nullopt};
  if (h.difficulty != state.difficulty || !meets_difficulty(header_hash(h), h.difficulty))
    return BlockError{BlockErrorCode::BadPow, std::nullopt, std::nullopt};
  if (h.merkle_root != compute_merkle_root(block.transactions))
    return BlockError{BlockErrorCode::BadMerkleRoot, std::nullopt, std::nullopt};

  ChainState scratch = state;
  std::uint64_t gas_used = 0;
  for (std::size_t i = 0; i < block.transactions.size(); ++i) {
    const auto& tx = block.transactions[i];
    if (auto err = validate_transaction(scratch, tx)) return BlockError{BlockErrorCode::BadTransaction, i, err};
    gas_used += gas_cost(tx.action);
    if (gas_used > gas::kBlockCap) return BlockError{BlockErrorCode::BlockGasExceeded, i, std::nullopt};
    apply_transaction(scratch, tx, h.number, i);
  }
  return std::nullopt;
}

std::pair<ChainState, std::vector<Receipt>> apply_block(ChainState state, const Block& block) {
  std::vector<Receipt> receipts;
  receipts.reserve(block.transactions.size());
  for (std::size_t i = 0; i < block.transactions.size(); ++i)
    receipts.push_back(apply_transaction(state, block.transactions[i], block.header.number, i));
  state.head = header_hash(block.header);
  state.height = block.header.number;
  return {std::move(state), std::move(receipts)};
}

std::optional<GrantError> apply_grant(ChainState& state, const Address& to, const PublicKey& public_key,
                                      const u256& amount) {
  auto it = state.accounts.find(to);
  if (it != state.accounts.end() && it->second.public_key && *it->second.public_key != public_key)
    return GrantError::KeyMismatch;
  try {
    if (derive_address(public_key) != to) return GrantError::AddressMismatch;
  } catch (const KeyError&) {
    return GrantError::AddressMismatch;
  }
  const u256 current = it == state.accounts.end() ? u256(0) : it->second.native_balance;
  auto balance = checked_add(current, amount);
  auto issued = checked_add(state.total_issued, amount);
  if (!balance || !issued) return GrantError::ArithmeticOverflow;
  Account& acct = state.accounts[to];
  acct.public_key = public_key;
  acct.native_balance = *balance;
  state.total_issued = *issued;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Store and queries

ChainStore::ChainStore(const GenesisConfig& config) : config_(config) {
  auto [genesis, state] = create_genesis(config);
  state_ = std::move(state);
  block_index_[header_hash(genesis.header)] = 0;
  blocks_.push_back(std::move(genesis));
}

std::optional<BlockError> ChainStore::append(const Block& block) {
  if (auto err = verify_block(state_, head_header(), block)) return err;
  auto [next, receipts] = apply_block(state_, block);
  state_ = std::move(next);
  for (auto& r : receipts) receipts_[r.tx_hash] = std::move(r);
  block_index_[header_hash(block.header)] = block.header.number;
  blocks_.push_back(block);
  return std::nullopt;
}

std::optional<GrantError> ChainStore::grant(const Address& to, const PublicKey& public_key, const u256& amount) {
  return apply_grant(state_, to, public_key, amount);
}

const Receipt* ChainStore::find_receipt(const Digest32& hash) const {
  auto it = receipts_.find(hash);
  return it == receipts_.end() ? nullptr : &it->second;
}

const Block* ChainStore::block_by_number(std::uint64_t number) const {
  return number < blocks_.size() ? &blocks_[number] : nullptr;
}

const Block* ChainStore::block_by_hash(const Digest32& hash) const {
  auto it = block_index_.find(hash);
  return it == block_index_.end() ? nullptr : &blocks_[it->second];
}

QueryResult query_chain(const ChainStore& store, const QueryKey& key) {
  return std::visit(Overloaded{
                        [&](const TxHashKey& k) -> QueryResult {
                          if (const auto* r = store.find_receipt(k.hash)) return *r;
                          return NotFound{};
                        },
                        [&](const BlockNumberKey& k) -> QueryResult {
                          if (const auto* b = store.block_by_number(k.number)) return *b;
                          return NotFound{};
                        },
                        [&](const BlockHashKey& k) -> QueryResult {
                          if (const auto* b = store.block_by_hash(k.hash)) return *b;
                          return NotFound{};
                        },
                        [&](const AddressKey& k) -> QueryResult {
                          const auto* acct = store.state().find_account(k.address);
                          if (acct == nullptr) return NotFound{};
                          return AccountView{acct->nonce, acct->native_balance};
                        },
                    },
                    key);
}

}  // namespace wdapp::ledger
