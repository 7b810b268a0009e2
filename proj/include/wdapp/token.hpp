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

// Fungible (ERC-20 semantics) and non-fungible (ERC-721 semantics) token
// state machines. Every mutating operation either succeeds and updates the
// state, or returns a revert code and leaves the state untouched.

#include "wdapp/canonical.hpp"
#include "wdapp/crypto.hpp"
#include "wdapp/u256.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace wdapp::token {

enum class Revert {
  BadName,
  BadSymbol,
  BadDecimals,
  NotOwner,
  InsufficientBalance,
  InsufficientAllowance,
  ZeroAddressRecipient,
  ArithmeticOverflow,
  TokenExists,
  NoSuchToken,
  WrongOwner,
  NotAuthorized,
  SelfOperator,
  NoSuchContract,
  WrongTokenKind,
};

std::string_view to_string(Revert code);
std::optional<Revert> revert_from_string(std::string_view name);

/// nullopt means success.
using Outcome = std::optional<Revert>;

inline constexpr std::size_t kMaxSymbolLength = 11;
inline constexpr unsigned kMaxDecimals = 18;

struct FungibleTokenState {
  std::string name;
  std::string symbol;
  unsigned decimals = 0;
  u256 total_supply = 0;
  Address owner;
  std::map<Address, u256> balances;
  std::map<std::pair<Address, Address>, u256> allowances;  // (owner, spender)

  bool operator==(const FungibleTokenState&) const = default;
};

struct NftState {
  std::string name;
  std::string symbol;
  Address owner;  // contract admin
  std::map<u256, Address> owners;
  std::map<u256, std::string> token_uris;
  std::map<u256, Address> token_approvals;
  std::set<std::pair<Address, Address>> operator_approvals;  // (owner, operator)

  bool operator==(const NftState&) const = default;
};

using TokenState = std::variant<FungibleTokenState, NftState>;

/// CREATE-style contract address: last 20 bytes of
/// hash_bytes(canonical_encode({"deployer": deployer, "nonce": nonce})).
Address contract_address(const Address& deployer, std::uint64_t deployer_nonce);

// Deployment parameter checks. Symbol length is counted in code points.
Outcome check_deploy_fungible(std::string_view name, std::string_view symbol, unsigned decimals);
Outcome check_deploy_nft(std::string_view name, std::string_view symbol);

FungibleTokenState make_fungible(const Address& deployer, std::string name, std::string symbol, unsigned decimals,
                                 const u256& total_supply);
NftState make_nft(const Address& deployer, std::string name, std::string symbol);

// Fungible operations.
Outcome ft_transfer(FungibleTokenState& s, const Address& caller, const Address& to, const u256& amount);
Outcome ft_approve(FungibleTokenState& s, const Address& caller, const Address& spender, const u256& amount);
Outcome ft_transfer_from(FungibleTokenState& s, const Address& caller, const Address& from, const Address& to,
                         const u256& amount);
Outcome ft_mint(FungibleTokenState& s, const Address& caller, const Address& to, const u256& amount);
Outcome ft_burn(FungibleTokenState& s, const Address& caller, const u256& amount);

Outcome transfer_contract_ownership(FungibleTokenState& s, const Address& caller, const Address& new_owner);
Outcome transfer_contract_ownership(NftState& s, const Address& caller, const Address& new_owner);

u256 balance_of(const FungibleTokenState& s, const Address& who);
u256 allowance(const FungibleTokenState& s, const Address& owner, const Address& spender);

// Non-fungible operations.
Outcome nft_mint(NftState& s, const Address& caller, const Address& to, const u256& token_id, std::string uri);
Outcome nft_transfer_from(NftState& s, const Address& caller, const Address& from, const Address& to,
                          const u256& token_id);
Outcome nft_approve(NftState& s, const Address& caller, const Address& approved, const u256& token_id);
Outcome nft_set_approval_for_all(NftState& s, const Address& caller, const Address& op, bool approved);
Outcome nft_burn(NftState& s, const Address& caller, const u256& token_id);

/// Views on unknown ids yield NoSuchToken as the error alternative.
std::variant<Address, Revert> owner_of(const NftState& s, const u256& token_id);
std::variant<std::string, Revert> token_uri(const NftState& s, const u256& token_id);
/// Zero address when no approval is set.
std::variant<Address, Revert> get_approved(const NftState& s, const u256& token_id);
bool is_approved_for_all(const NftState& s, const Address& owner, const Address& op);
std::size_t total_minted(const NftState& s);

// Call records carried in transactions.
struct FtTransfer { Address to; u256 amount; bool operator==(const FtTransfer&) const = default; };
struct FtApprove { Address spender; u256 amount; bool operator==(const FtApprove&) const = default; };
struct FtTransferFrom { Address from; Address to; u256 amount; bool operator==(const FtTransferFrom&) const = default; };
struct FtMint { Address to; u256 amount; bool operator==(const FtMint&) const = default; };
struct FtBurn { u256 amount; bool operator==(const FtBurn&) const = default; };
struct TransferOwnership { Address new_owner; bool operator==(const TransferOwnership&) const = default; };
struct NftMint { Address to; u256 token_id; std::string uri; bool operator==(const NftMint&) const = default; };
struct NftTransferFrom { Address from; Address to; u256 token_id; bool operator==(const NftTransferFrom&) const = default; };
struct NftApprove { Address approved; u256 token_id; bool operator==(const NftApprove&) const = default; };
struct NftSetApprovalForAll { Address op; bool approved = false; bool operator==(const NftSetApprovalForAll&) const = default; };
struct NftBurn { u256 token_id; bool operator==(const NftBurn&) const = default; };

using TokenCall = std::variant<FtTransfer, FtApprove, FtTransferFrom, FtMint, FtBurn, TransferOwnership, NftMint,
                               NftTransferFrom, NftApprove, NftSetApprovalForAll, NftBurn>;

std::string_view method_name(const TokenCall& call);
/// Fixed gas cost of executing `call`.
std::uint64_t gas_cost(const TokenCall& call);

/// Dispatches to the matching operation. A call aimed at the other token
/// kind reverts with WrongTokenKind.
Outcome apply_call(TokenState& state, const Address& caller, const TokenCall& call);

class DecodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"method": ..., "args": {...}}
json call_to_json(const TokenCall& call);
/// Throws DecodeError.
TokenCall call_from_json(const json& j);

/// Full state rendering used by state digests.
json state_to_json(const TokenState& state);
/// Public metadata: kind, name, symbol, owner and the per-kind counters.
json meta_to_json(const TokenState& state);

}  // namespace wdapp::token
