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

#include "wdapp/token.hpp"
#include "wdapp/overloaded.hpp"

#include "wire.hpp"

#include <array>

namespace wdapp::token {
namespace {

constexpr std::array<std::string_view, 15> kRevertNames = {
    "BadName",      "BadSymbol",   "BadDecimals",  "NotOwner",       "InsufficientBalance",
    "InsufficientAllowance", "ZeroAddressRecipient", "ArithmeticOverflow", "TokenExists", "NoSuchToken",
    "WrongOwner",   "NotAuthorized", "SelfOperator", "NoSuchContract", "WrongTokenKind",
};

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xc0) != 0x80) ++n;
  return n;
}

void credit(std::map<Address, u256>& balances, const Address& who, const u256& amount) {
  if (amount == 0) return;
  balances[who] += amount;
}

// Caller guarantees balances[who] >= amount.
void debit(std::map<Address, u256>& balances, const Address& who, const u256& amount) {
  if (amount == 0) return;
  auto it = balances.find(who);
  it->second -= amount;
  if (it->second == 0) balances.erase(it);
}

}  // namespace

std::string_view to_string(Revert code) { return kRevertNames.at(static_cast<std::size_t>(code)); }

std::optional<Revert> revert_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kRevertNames.size(); ++i)
    if (kRevertNames[i] == name) return static_cast<Revert>(i);
  return std::nullopt;
}

Address contract_address(const Address& deployer, std::uint64_t deployer_nonce) {
  const json record = {{"deployer", deployer.hex()}, {"nonce", deployer_nonce}};
  const auto digest = hash_bytes(canonical_encode(record));
  Address out;
  std::copy(digest.bytes.end() - Address::size, digest.bytes.end(), out.bytes.begin());
  return out;
}

Outcome check_deploy_nft(std::string_view name, std::string_view symbol) {
  if (name.empty()) return Revert::BadName;
  if (symbol.empty() || code_points(symbol) > kMaxSymbolLength) return Revert::BadSymbol;
  return std::nullopt;
}

Outcome check_deploy_fungible(std::string_view name, std::string_view symbol, unsigned decimals) {
  if (auto bad = check_deploy_nft(name, symbol)) return bad;
  if (decimals > kMaxDecimals) return Revert::BadDecimals;
  return std::nullopt;
}

FungibleTokenState make_fungible(const Address& deployer, std::string name, std::string symbol, unsigned decimals,
                                 const u256& total_supply) {
  FungibleTokenState s;
  s.name = std::move(name);
  s.symbol = std::move(symbol);
  s.decimals = decimals;
  s.total_supply = total_supply;
  s.owner = deployer;
  credit(s.balances, deployer, total_supply);
  return s;
}

NftState make_nft(const Address& deployer, std::string name, std::string symbol) {
  NftState s;
  s.name = std::move(name);
  s.symbol = std::move(symbol);
  s.owner = deployer;
  return s;
}

u256 balance_of(const FungibleTokenState& s, const Address& who) {
  auto it = s.balances.find(who);
  return it == s.balances.end() ? u256(0) : it->second;
}

u256 allowance(const FungibleTokenState& s, const Address& owner, const Address& spender) {
  auto it = s.allowances.find({owner, spender});
  return it == s.allowances.end() ? u256(0) : it->second;
}

Outcome ft_transfer(FungibleTokenState& s, const Address& caller, const Address& to, const u256& amount) {
  if (balance_of(s, caller) < amount) return Revert::InsufficientBalance;
  if (to.is_zero()) return Revert::ZeroAddressRecipient;
  if (caller == to) return std::nullopt;
  debit(s.balances, caller, amount);
  credit(s.balances, to, amount);
  return std::nullopt;
}

Outcome ft_approve(FungibleTokenState& s, const Address& caller, const Address& spender, const u256& amount) {
  if (amount == 0)
    s.allowances.erase({caller, spender});
  else
    s.allowances[{caller, spender}] = amount;
  return std::nullopt;
}

Outcome ft_transfer_from(FungibleTokenState& s, const Address& caller, const Address& from, const Address& to,
                         const u256& amount) {
  const u256 allowed = allowance(s, from, caller);
  if (allowed < amount) return Revert::InsufficientAllowance;
  if (balance_of(s, from) < amount) return Revert::InsufficientBalance;
  if (to.is_zero()) return Revert::ZeroAddressRecipient;
  if (from != to) {
    debit(s.balances, from, amount);
    credit(s.balances, to, amount);
  }
  ft_approve(s, from, caller, allowed - amount);
  return std::nullopt;
}

Outcome ft_mint(FungibleTokenState& s, const Address& caller, const Address& to, const u256& amount) {
  if (caller != s.owner) return Revert::NotOwner;
  auto supply = checked_add(s.total_supply, amount);
  if (!supply) return Revert::ArithmeticOverflow;
  if (to.is_zero()) return Revert::ZeroAddressRecipient;
  s.total_supply = *supply;
  credit(s.balances, to, amount);
  return std::nullopt;
}

Outcome ft_burn(FungibleTokenState& s, const Address& caller, const u256& amount) {
  if (balance_of(s, caller) < amount) return Revert::InsufficientBalance;
  debit(s.balances, caller, amount);
  s.total_supply -= amount;
  return std::nullopt;
}

namespace {
template <class State>
Outcome change_owner(State& s, const Address& caller, const Address& new_owner) {
  if (caller != s.owner) return Revert::NotOwner;
  if (new_owner.is_zero()) return Revert::ZeroAddressRecipient;
  s.owner = new_owner;
  return std::nullopt;
}
}  // namespace

Outcome transfer_contract_ownership(FungibleTokenState& s, const Address& caller, const Address& new_owner) {
  return change_owner(s, caller, new_owner);
}

Outcome transfer_contract_ownership(NftState& s, const Address& caller, const Address& new_owner) {
  return change_owner(s, caller, new_owner);
}

Outcome nft_mint(NftState& s, const Address& caller, const Address& to, const u256& token_id, std::string uri) {
  if (caller != s.owner) return Revert::NotOwner;
  if (s.owners.contains(token_id)) return Revert::TokenExists;
  if (to.is_zero()) return Revert::ZeroAddressRecipient;
  s.owners.emplace(token_id, to);
  s.token_uris.emplace(token_id, std::move(uri));
  return std::nullopt;
}

Outcome nft_transfer_from(NftState& s, const Address& caller, const Address& from, const Address& to,
                          const u256& token_id) {
  auto it = s.owners.find(token_id);
  if (it == s.owners.end()) return Revert::NoSuchToken;
  if (it->second != from) return Revert::WrongOwner;
  auto approval = s.token_approvals.find(token_id);
  const bool authorized = caller == from || (approval != s.token_approvals.end() && approval->second == caller) ||
                          s.operator_approvals.contains({from, caller});
  if (!authorized) return Revert::NotAuthorized;
  if (to.is_zero()) return Revert::ZeroAddressRecipient;
  it->second = to;
  s.token_approvals.erase(token_id);
  return std::nullopt;
}

Outcome nft_approve(NftState& s, const Address& caller, const Address& approved, const u256& token_id) {
  auto it = s.owners.find(token_id);
  if (it == s.owners.end()) return Revert::NoSuchToken;
  const Address& holder = it->second;
  if (caller != holder && !s.operator_approvals.contains({holder, caller})) return Revert::NotAuthorized;
  if (approved.is_zero())
    s.token_approvals.erase(token_id);
  else
    s.token_approvals[token_id] = approved;
  return std::nullopt;
}

Outcome nft_set_approval_for_all(NftState& s, const Address& caller, const Address& op, bool approved) {
  if (op == caller) return Revert::SelfOperator;
  if (approved)
    s.operator_approvals.insert({caller, op});
  else
    s.operator_approvals.erase({caller, op});
  return std::nullopt;
}

Outcome nft_burn(NftState& s, const Address& caller, const u256& token_id) {
  auto it = s.owners.find(token_id);
  if (it == s.owners.end()) return Revert::NoSuchToken;
  if (it->second != caller) return Revert::NotAuthorized;
  s.owners.erase(it);
  s.token_uris.erase(token_id);
  s.token_approvals.erase(token_id);
  return std::nullopt;
}

std::variant<Address, Revert> owner_of(const NftState& s, const u256& token_id) {
  auto it = s.owners.find(token_id);
  if (it == s.owners.end()) return Revert::NoSuchToken;
  return it->second;
}

std::variant<std::string, Revert> token_uri(const NftState& s, const u256& token_id) {
  if (!s.owners.contains(token_id)) return Revert::NoSuchToken;
  auto it = s.token_uris.find(token_id);
  return it == s.token_uris.end() ? std::string() : it->second;
}

std::variant<Address, Revert> get_approved(const NftState& s, const u256& token_id) {
  if (!s.owners.contains(token_id)) return Revert::NoSuchToken;
  auto it = s.token_approvals.find(token_id);
  return it == s.token_approvals.end() ? Address{} : it->second;
}

bool is_approved_for_all(const NftState& s, const Address& owner, const Address& op) {
  return s.operator_approvals.contains({owner, op});
}

std::size_t total_minted(const NftState& s) { return s.owners.size(); }

std::string_view method_name(const TokenCall& call) {
  return std::visit(Overloaded{
                        [](const FtTransfer&) { return std::string_view("ft_transfer"); },
                        [](const FtApprove&) { return std::string_view("ft_approve"); },
                        [](const FtTransferFrom&) { return std::string_view("ft_transfer_from"); },
                        [](const FtMint&) { return std::string_view("ft_mint"); },
                        [](const FtBurn&) { return std::string_view("ft_burn"); },
                        [](const TransferOwnership&) { return std::string_view("transfer_ownership"); },
                        [](const NftMint&) { return std::string_view("nft_mint"); },
                        [](const NftTransferFrom&) { return std::string_view("nft_transfer_from"); },
                        [](const NftApprove&) { return std::string_view("nft_approve"); },
                        [](const NftSetApprovalForAll&) { return std::string_view("nft_set_approval_for_all"); },
                        [](const NftBurn&) { return std::string_view("nft_burn"); },
                    },
                    call);
}

std::uint64_t gas_cost(const TokenCall& call) {
  return std::visit(Overloaded{
                        [](const FtTransfer&) -> std::uint64_t { return 21000; },
                        [](const FtApprove&) -> std::uint64_t { return 10000; },
                        [](const FtTransferFrom&) -> std::uint64_t { return 30000; },
                        [](const FtMint&) -> std::uint64_t { return 25000; },
                        [](const FtBurn&) -> std::uint64_t { return 20000; },
                        [](const TransferOwnership&) -> std::uint64_t { return 10000; },
                        [](const NftMint&) -> std::uint64_t { return 40000; },
                        [](const NftTransferFrom&) -> std::uint64_t { return 30000; },
                        [](const NftApprove&) -> std::uint64_t { return 10000; },
                        [](const NftSetApprovalForAll&) -> std::uint64_t { return 10000; },
                        [](const NftBurn&) -> std::uint64_t { return 20000; },
                    },
                    call);
}

Outcome apply_call(TokenState& state, const Address& caller, const TokenCall& call) {
  if (auto* ft = std::get_if<FungibleTokenState>(&state)) {
    return std::visit(Overloaded{
                          [&](const FtTransfer& c) { return ft_transfer(*ft, caller, c.to, c.amount); },
                          [&](const FtApprove& c) { return ft_approve(*ft, caller, c.spender, c.amount); },
                          [&](const FtTransferFrom& c) { return ft_transfer_from(*ft, caller, c.from, c.to, c.amount); },
                          [&](const FtMint& c) { return ft_mint(*ft, caller, c.to, c.amount); },
                          [&](const FtBurn& c) { return ft_burn(*ft, caller, c.amount); },
                          [&](const TransferOwnership& c) { return transfer_contract_ownership(*ft, caller, c.new_owner); },
                          [](const auto&) -> Outcome { return Revert::WrongTokenKind; },
                      },
                      call);
  }
  auto& nft = std::get<NftState>(state);
  return std::visit(Overloaded{
                        [&](const NftMint& c) { return nft_mint(nft, caller, c.to, c.token_id, c.uri); },
                        [&](const NftTransferFrom& c) { return nft_transfer_from(nft, caller, c.from, c.to, c.token_id); },
                        [&](const NftApprove& c) { return nft_approve(nft, caller, c.approved, c.token_id); },
                        [&](const NftSetApprovalForAll& c) { return nft_set_approval_for_all(nft, caller, c.op, c.approved); },
                        [&](const NftBurn& c) { return nft_burn(nft, caller, c.token_id); },
                        [&](const TransferOwnership& c) { return transfer_contract_ownership(nft, caller, c.new_owner); },
                        [](const auto&) -> Outcome { return Revert::WrongTokenKind; },
                    },
                    call);
}

// Wire form.

namespace {

using wire::address_field;
using wire::bool_field;
using wire::require;
using wire::string_field;
using wire::u256_field;

json id_key(const u256& id) { return to_decimal(id); }

}  // namespace

json call_to_json(const TokenCall& call) {
  json args = std::visit(
      Overloaded{
          [](const FtTransfer& c) { return json{{"to", c.to.hex()}, {"amount", to_decimal(c.amount)}}; },
          [](const FtApprove& c) { return json{{"spender", c.spender.hex()}, {"amount", to_decimal(c.amount)}}; },
          [](const FtTransferFrom& c) {
            return json{{"from", c.from.hex()}, {"to", c.to.hex()}, {"amount", to_decimal(c.amount)}};
          },
          [](const FtMint& c) { return json{{"to", c.to.hex()}, {"amount", to_decimal(c.amount)}}; },
          [](const FtBurn& c) { return json{{"amount", to_decimal(c.amount)}}; },
          [](const TransferOwnership& c) { return json{{"new_owner", c.new_owner.hex()}}; },
          [](const NftMint& c) {
            return json{{"to", c.to.hex()}, {"token_id", to_decimal(c.token_id)}, {"uri", c.uri}};
          },
          [](const NftTransferFrom& c) {
            return json{{"from", c.from.hex()}, {"to", c.to.hex()}, {"token_id", to_decimal(c.token_id)}};
          },
          [](const NftApprove& c) { return json{{"approved", c.approved.hex()}, {"token_id", to_decimal(c.token_id)}}; },
          [](const NftSetApprovalForAll& c) { return json{{"operator", c.op.hex()}, {"approved", c.approved}}; },
          [](const NftBurn& c) { return json{{"token_id", to_decimal(c.token_id)}}; },
      },
      call);
  return json{{"method", std::string(method_name(call))}, {"args", std::move(args)}};
}

TokenCall call_from_json(const json& j) {
  const auto method = string_field(j, "method");
  const auto& a = require(j, "args");
  if (!a.is_object()) throw DecodeError("'args' must be an object");
  if (method == "ft_transfer") return FtTransfer{address_field(a, "to"), u256_field(a, "amount")};
  if (method == "ft_approve") return FtApprove{address_field(a, "spender"), u256_field(a, "amount")};
  if (method == "ft_transfer_from")
    return FtTransferFrom{address_field(a, "from"), address_field(a, "to"), u256_field(a, "amount")};
  if (method == "ft_mint") return FtMint{address_field(a, "to"), u256_field(a, "amount")};
  if (method == "ft_burn") return FtBurn{u256_field(a, "amount")};
  if (method == "transfer_ownership") return TransferOwnership{address_field(a, "new_owner")};
  if (method == "nft_mint") return NftMint{address_field(a, "to"), u256_field(a, "token_id"), string_field(a, "uri")};
  if (method == "nft_transfer_from")
    return NftTransferFrom{address_field(a, "from"), address_field(a, "to"), u256_field(a, "token_id")};
  if (method == "nft_approve") return NftApprove{address_field(a, "approved"), u256_field(a, "token_id")};
  if (method == "nft_set_approval_for_all")
    return NftSetApprovalForAll{address_field(a, "operator"), bool_field(a, "approved")};
  if (method == "nft_burn") return NftBurn{u256_field(a, "token_id")};
  throw DecodeError("unknown token method '" + method + "'");
}

json state_to_json(const TokenState& state) {
  if (const auto* ft = std::get_if<FungibleTokenState>(&state)) {
    json balances = json::object();
    for (const auto& [who, amount] : ft->balances) balances[who.hex()] = to_decimal(amount);
    json allowances = json::object();
    for (const auto& [key, amount] : ft->allowances) allowances[key.first.hex()][key.second.hex()] = to_decimal(amount);
    return json{{"kind", "ft"},
                {"name", ft->name},
                {"symbol", ft->symbol},
                {"decimals", ft->decimals},
                {"total_supply", to_decimal(ft->total_supply)},
                {"owner", ft->owner.hex()},
                {"balances", std::move(balances)},
                {"allowances", std::move(allowances)}};
  }
  const auto& nft = std::get<NftState>(state);
  json owners = json::object();
  for (const auto& [id, who] : nft.owners) owners[id_key(id)] = who.hex();
  json uris = json::object();
  for (const auto& [id, uri] : nft.token_uris) uris[id_key(id)] = uri;
  json approvals = json::object();
  for (const auto& [id, who] : nft.token_approvals) approvals[id_key(id)] = who.hex();
  json operators = json::object();
  for (const auto& [holder, op] : nft.operator_approvals) operators[holder.hex()][op.hex()] = true;
  return json{{"kind", "nft"},
              {"name", nft.name},
              {"symbol", nft.symbol},
              {"owner", nft.owner.hex()},
              {"owners", std::move(owners)},
              {"token_uris", std::move(uris)},
              {"token_approvals", std::move(approvals)},
              {"operator_approvals", std::move(operators)}};
}

json meta_to_json(const TokenState& state) {
  if (const auto* ft = std::get_if<FungibleTokenState>(&state)) {
    return json{{"kind", "ft"},           {"name", ft->name},
                {"symbol", ft->symbol},   {"decimals", ft->decimals},
                {"total_supply", to_decimal(ft->total_supply)}, {"owner", ft->owner.hex()}};
  }
  const auto& nft = std::get<NftState>(state);
  return json{{"kind", "nft"},
              {"name", nft.name},
              {"symbol", nft.symbol},
              {"owner", nft.owner.hex()},
              {"total_minted", total_minted(nft)}};
}

}  // namespace wdapp::token
