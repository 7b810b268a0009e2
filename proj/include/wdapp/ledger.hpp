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

#include "wdapp/canonical.hpp"
#include "wdapp/crypto.hpp"
#include "wdapp/token.hpp"
#include "wdapp/u256.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wdapp::ledger {

using token::DecodeError;

// Gas schedule, in gas units.
namespace gas {
inline constexpr std::uint64_t kNativeTransfer = 21000;
inline constexpr std::uint64_t kDeployFungible = 100000;
inline constexpr std::uint64_t kDeployNft = 120000;
inline constexpr std::uint64_t kBlockCap = 1000000;
}  // namespace gas

inline constexpr unsigned kMaxDifficulty = 32;

struct NativeTransfer {
  Address to;
  u256 amount;
  bool operator==(const NativeTransfer&) const = default;
};

struct DeployFungible {
  std::string name;
  std::string symbol;
  unsigned decimals = 18;
  u256 total_supply;
  bool operator==(const DeployFungible&) const = default;
};

struct DeployNft {
  std::string name;
  std::string symbol;
  bool operator==(const DeployNft&) const = default;
};

struct TokenCallAction {
  Address contract;
  token::TokenCall call;
  bool operator==(const TokenCallAction&) const = default;
};

using Action = std::variant<NativeTransfer, DeployFungible, DeployNft, TokenCallAction>;

std::uint64_t gas_cost(const Action& action);

struct Transaction {
  std::uint64_t chain_id = 0;
  Address from;
  std::uint64_t nonce = 0;
  Action action;
  std::uint64_t gas_limit = 0;
  u256 gas_price = 0;
  Signature signature;

  bool operator==(const Transaction&) const = default;
};

json action_to_json(const Action& action);
Action action_from_json(const json& j);
json tx_to_json(const Transaction& tx, bool with_signature = true);
/// Accepts integers either as base-10 strings or JSON unsigned numbers.
/// Throws DecodeError.
Transaction tx_from_json(const json& j);

/// hash_bytes(canonical_encode(tx without signature)).
Digest32 signing_digest(const Transaction& tx);
/// hash_bytes(canonical_encode(tx)).
Digest32 tx_hash(const Transaction& tx);
void sign_transaction(Transaction& tx, const PrivateKey& key);

struct BlockHeader {
  std::uint64_t number = 0;
  Digest32 parent_hash;
  std::uint64_t timestamp = 0;
  unsigned difficulty = 0;
  Digest32 merkle_root;
  std::uint64_t nonce = 0;

  bool operator==(const BlockHeader&) const = default;
};

struct Block {
  BlockHeader header;
  std::vector<Transaction> transactions;

  bool operator==(const Block&) const = default;
};

json header_to_json(const BlockHeader& header);
BlockHeader header_from_json(const json& j);
json block_to_json(const Block& block);
Block block_from_json(const json& j);
Digest32 header_hash(const BlockHeader& header);

/// Binary Merkle tree, odd levels duplicate their last node, parent =
/// hash(left || right), empty list hashes the empty string.
Digest32 compute_merkle_root(const std::vector<Digest32>& tx_hashes);
Digest32 compute_merkle_root(const std::vector<Transaction>& txs);

enum class ReceiptStatus { Success, Reverted };

struct Receipt {
  Digest32 tx_hash;
  ReceiptStatus status = ReceiptStatus::Success;
  std::optional<std::string> error;
  std::uint64_t block_number = 0;
  std::uint64_t tx_index = 0;
  std::uint64_t gas_used = 0;
  std::optional<Address> contract_address;  // deploys only

  bool operator==(const Receipt&) const = default;
};

json receipt_to_json(const Receipt& receipt);

struct Account {
  std::uint64_t nonce = 0;
  u256 native_balance = 0;
  std::optional<PublicKey> public_key;

  bool operator==(const Account&) const = default;
};

struct ChainState {
  std::uint64_t chain_id = 0;
  unsigned difficulty = 0;
  std::map<Address, Account> accounts;
  std::map<Address, token::TokenState> contracts;
  Digest32 head;
  std::uint64_t height = 0;
  /// Lifetime sums backing the native-coin conservation check.
  u256 total_issued = 0;
  u256 burned_fees = 0;

  bool operator==(const ChainState&) const = default;

  const Account* find_account(const Address& a) const {
    auto it = accounts.find(a);
    return it == accounts.end() ? nullptr : &it->second;
  }
};

json state_to_json(const ChainState& state);
Digest32 state_digest(const ChainState& state);

struct GenesisConfig {
  std::uint64_t chain_id = 1;
  unsigned difficulty = 12;
  std::map<Address, u256> allocations;
  std::map<Address, PublicKey> registered_keys;

  bool operator==(const GenesisConfig&) const = default;
};

json genesis_to_json(const GenesisConfig& config);
GenesisConfig genesis_from_json(const json& j);

class LedgerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws LedgerError for difficulty > 32, a registered key whose address does
/// not match, or an allocation sum above 2^256-1.
std::pair<Block, ChainState> create_genesis(const GenesisConfig& config);

enum class TxError {
  BadChainId,
  BadSignature,
  BadNonce,
  InsufficientGasLimit,
  InsufficientFunds,
  MempoolDuplicate,
};

std::string_view to_string(TxError e);

/// Checks run in this order: chain id, signature against the registered key,
/// nonce == account nonce, gas limit >= fixed cost, balance covers
/// gas_limit * gas_price + native amount.
std::optional<TxError> validate_transaction(const ChainState& state, const Transaction& tx);

/// Same checks, but the nonce may lie anywhere in [account nonce, max_nonce].
std::optional<TxError> validate_transaction(const ChainState& state, const Transaction& tx,
                                            std::uint64_t max_nonce);

class Mempool {
 public:
  using Key = std::pair<Address, std::uint64_t>;

  std::size_t size() const { return by_key_.size(); }
  bool empty() const { return by_key_.empty(); }
  bool contains(const Digest32& hash) const { return by_hash_.contains(hash); }
  const Transaction* find(const Digest32& hash) const;
  const std::map<Key, Transaction>& entries() const { return by_key_; }

  /// Next nonce `sender` would use: account nonce plus its contiguous run of
  /// pooled transactions.
  std::uint64_t pending_nonce(const ChainState& state, const Address& sender) const;

  /// Inserts or replaces by (from, nonce). Replacement requires a strictly
  /// higher gas price.
  std::optional<TxError> insert(const Transaction& tx);
  void erase(const Digest32& hash);

  /// Drops stale nonces and next-in-line transactions that no longer validate.
  void prune(const ChainState& state);

  /// Bumped on every insertion; background mining restarts when it changes.
  std::uint64_t generation() const { return generation_; }

 private:
  std::map<Key, Transaction> by_key_;
  std::map<Digest32, Key> by_hash_;
  std::uint64_t generation_ = 0;
};

struct SubmitResult {
  std::optional<Digest32> tx_hash;
  std::optional<TxError> error;
};

/// Validates against `state` (allowing nonces queued behind pooled ones) and
/// inserts into `mempool`.
SubmitResult submit_transaction(Mempool& mempool, const ChainState& state, const Transaction& tx);

/// Executes one pre-validated transaction in place and returns its receipt.
Receipt apply_transaction(ChainState& state, const Transaction& tx, std::uint64_t block_number,
                          std::uint64_t tx_index);

/// Orders mempool transactions by (gas_price desc, tx_hash asc) among those
/// whose nonce is next for their sender, executes them on a scratch copy of
/// `state`, and drops any that fail. Stops adding at the block gas cap. The
/// returned header is unsealed (nonce 0).
Block assemble_block(const ChainState& state, const Mempool& mempool, const BlockHeader& parent, unsigned difficulty,
                     std::uint64_t timestamp);

/// Nonce search from 0 upward. Returns false if `should_stop` fired first;
/// it is polled every few thousand attempts.
bool seal_header(BlockHeader& header, const std::function<bool()>& should_stop = {});

/// assemble_block followed by seal_header.
Block mine_block(const ChainState& state, const Mempool& mempool, const BlockHeader& parent, unsigned difficulty,
                 std::uint64_t timestamp);

enum class BlockErrorCode { BadNumber, BadParent, BadPow, BadMerkleRoot, BadTransaction, BlockGasExceeded };

std::string_view to_string(BlockErrorCode code);

struct BlockError {
  BlockErrorCode code;
  std::optional<std::size_t> index;
  std::optional<TxError> cause;

  std::string describe() const;
};

/// Checks (in order) number, parent hash, proof of work against the chain
/// difficulty, merkle root, then validates every transaction in sequence.
std::optional<BlockError> verify_block(const ChainState& state, const BlockHeader& parent, const Block& block);

/// Precondition: verify_block passed.
std::pair<ChainState, std::vector<Receipt>> apply_block(ChainState state, const Block& block);

/// Faucet-style credit outside of any transaction. Registers `public_key` on
/// first use.
enum class GrantError { KeyMismatch, AddressMismatch, ArithmeticOverflow };
std::string_view to_string(GrantError e);
std::optional<GrantError> apply_grant(ChainState& state, const Address& to, const PublicKey& public_key,
                                      const u256& amount);

/// Blocks, receipts and the current state, with lookup indexes.
class ChainStore {
 public:
  explicit ChainStore(const GenesisConfig& config);

  const ChainState& state() const { return state_; }
  const GenesisConfig& genesis_config() const { return config_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& head_block() const { return blocks_.back(); }
  const BlockHeader& head_header() const { return blocks_.back().header; }
  std::uint64_t height() const { return state_.height; }

  /// Verifies and applies. On failure nothing changes.
  std::optional<BlockError> append(const Block& block);
  std::optional<GrantError> grant(const Address& to, const PublicKey& public_key, const u256& amount);

  const Receipt* find_receipt(const Digest32& tx_hash) const;
  const Block* block_by_number(std::uint64_t number) const;
  const Block* block_by_hash(const Digest32& hash) const;

 private:
  GenesisConfig config_;
  ChainState state_;
  std::vector<Block> blocks_;
  std::map<Digest32, std::uint64_t> block_index_;
  std::map<Digest32, Receipt> receipts_;
};

struct TxHashKey { Digest32 hash; };
struct BlockNumberKey { std::uint64_t number; };
struct BlockHashKey { Digest32 hash; };
struct AddressKey { Address address; };
using QueryKey = std::variant<TxHashKey, BlockNumberKey, BlockHashKey, AddressKey>;

struct NotFound {
  bool operator==(const NotFound&) const = default;
};
struct AccountView {
  std::uint64_t nonce = 0;
  u256 native_balance = 0;
  bool operator==(const AccountView&) const = default;
};
using QueryResult = std::variant<NotFound, Receipt, Block, AccountView>;

QueryResult query_chain(const ChainStore& store, const QueryKey& key);

}  // namespace wdapp::ledger
