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

#include "wdapp/node.hpp"

#include "wire.hpp"

#include <chrono>

namespace wdapp::node {
namespace {

Response error(int status, std::string_view code, std::string detail = {}) {
  json body = {{"error", std::string(code)}};
  if (!detail.empty()) body["detail"] = std::move(detail);
  return {status, std::move(body)};
}

Response not_found() { return error(404, "NotFound"); }

template <class Fixed>
std::optional<Fixed> parse_id(std::string_view text) {
  return Fixed::from_hex(text);
}

json header_view(const ledger::BlockHeader& h) {
  return json{{"number", h.number},         {"parent_hash", h.parent_hash.hex()}, {"timestamp", h.timestamp},
              {"difficulty", h.difficulty}, {"merkle_root", h.merkle_root.hex()}, {"nonce", h.nonce}};
}

json block_view(const ledger::Block& b) {
  json hashes = json::array();
  for (const auto& tx : b.transactions) hashes.push_back(ledger::tx_hash(tx).hex());
  return json{{"hash", ledger::header_hash(b.header).hex()},
              {"header", header_view(b.header)},
              {"tx_count", b.transactions.size()},
              {"tx_hashes", std::move(hashes)}};
}

json block_summary(const ledger::Block& b) {
  return json{{"number", b.header.number},
              {"hash", ledger::header_hash(b.header).hex()},
              {"tx_count", b.transactions.size()},
              {"nonce", b.header.nonce}};
}

std::optional<json> parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
}

ledger::GenesisConfig genesis_for(const NodeConfig& c) {
  ledger::GenesisConfig g;
  g.chain_id = c.chain_id;
  g.difficulty = c.difficulty;
  return g;
}

}  // namespace

void NodeConfig::validate() const {
  if (difficulty > ledger::kMaxDifficulty) throw ConfigError("difficulty must be at most 32");
  if (faucet_grant == 0) throw ConfigError("faucet grant must be positive");
  if (auto_mine && auto_mine_interval_ms == 0) throw ConfigError("auto-mine interval must be positive");
  if (journal.empty()) throw ConfigError("journal path must be set");
}

NodeConfig config_from_json(const json& j, NodeConfig c) {
  if (!j.is_object()) throw ConfigError("node config must be a JSON object");
  try {
    if (j.contains("chain_id")) c.chain_id = wire::u64_field(j, "chain_id");
    if (j.contains("difficulty")) {
      const auto d = wire::u64_field(j, "difficulty");
      if (d > ledger::kMaxDifficulty) throw ConfigError("difficulty must be at most 32");
      c.difficulty = static_cast<unsigned>(d);
    }
    if (j.contains("host")) c.host = wire::string_field(j, "host");
    if (j.contains("port")) {
      const auto p = wire::u64_field(j, "port");
      if (p > 65535) throw ConfigError("port out of range");
      c.port = static_cast<std::uint16_t>(p);
    }
    if (j.contains("journal")) c.journal = wire::string_field(j, "journal");
    if (j.contains("auto_mine")) c.auto_mine = wire::bool_field(j, "auto_mine");
    if (j.contains("auto_mine_interval_ms")) c.auto_mine_interval_ms = wire::u64_field(j, "auto_mine_interval_ms");
    if (j.contains("faucet_grant")) c.faucet_grant = wire::u256_field(j, "faucet_grant");
    if (j.contains("cors_origin")) c.cors_origin = wire::string_field(j, "cors_origin");
  } catch (const token::DecodeError& e) {
    throw ConfigError(e.what());
  }
  return c;
}

Node::Node(NodeConfig config, Clock clock) : Node(config, std::move(clock), [&] {
  config.validate();
  return journal::Journal::open(config.journal, genesis_for(config));
}()) {}

Node::Node(NodeConfig config, Clock clock, std::pair<journal::Journal, ledger::ChainStore> opened)
    : config_(std::move(config)),
      clock_(std::move(clock)),
      journal_(std::move(opened.first)),
      store_(std::move(opened.second)) {
  if (config_.auto_mine) miner_ = std::jthread([this](std::stop_token st) { auto_mine_loop(st); });
}

Node::~Node() { stop_auto_mine(); }

void Node::stop_auto_mine() {
  if (miner_.joinable()) {
    miner_.request_stop();
    wake_.notify_all();
    miner_.join();
  }
}

std::uint64_t Node::now() const {
  if (clock_) return clock_();
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count());
}

Digest32 Node::head_hash() const {
  std::shared_lock lock(mutex_);
  return store_.state().head;
}

Digest32 Node::state_digest() const {
  std::shared_lock lock(mutex_);
  return ledger::state_digest(store_.state());
}

std::uint64_t Node::height() const {
  std::shared_lock lock(mutex_);
  return store_.height();
}

std::size_t Node::mempool_size() const {
  std::shared_lock lock(mutex_);
  return mempool_.size();
}

ledger::ChainState Node::state_snapshot() const {
  std::shared_lock lock(mutex_);
  return store_.state();
}

Response Node::faucet(const std::string& body) {
  auto parsed = parse_body(body);
  if (!parsed) return error(422, "Unparseable", "body is not JSON");
  Address to;
  PublicKey pk;
  try {
    to = wire::address_field(*parsed, "to");
    pk = wire::fixed_field<PublicKey>(*parsed, "public_key");
  } catch (const token::DecodeError& e) {
    return error(422, "Unparseable", e.what());
  }

  std::unique_lock lock(mutex_);
  ledger::ChainState trial = store_.state();
  if (auto err = ledger::apply_grant(trial, to, pk, config_.faucet_grant))
    return error(400, ledger::to_string(*err));
  journal_.append(journal::GrantEntry{to, pk, config_.faucet_grant});
  store_.grant(to, pk, config_.faucet_grant);
  return {200, json{{"address", to.hex()}, {"balance", to_decimal(store_.state().find_account(to)->native_balance)}}};
}

Response Node::submit(const std::string& body) {
  auto parsed = parse_body(body);
  if (!parsed) return error(422, "Unparseable", "body is not JSON");
  ledger::Transaction tx;
  try {
    tx = ledger::tx_from_json(*parsed);
  } catch (const token::DecodeError& e) {
    return error(422, "Unparseable", e.what());
  }
  ledger::SubmitResult result;
  {
    std::unique_lock lock(mutex_);
    result = ledger::submit_transaction(mempool_, store_.state(), tx);
  }
  if (result.error) return error(400, ledger::to_string(*result.error));
  submissions_.fetch_add(1);
  wake_.notify_all();
  return {200, json{{"tx_hash", result.tx_hash->hex()}}};
}

Response Node::get_tx(std::string_view hash) const {
  auto h = parse_id<Digest32>(hash);
  if (!h) return error(400, "BadRequest", "expected a 32-byte 0x-hex hash");
  std::shared_lock lock(mutex_);
  if (const auto* r = store_.find_receipt(*h)) return {200, ledger::receipt_to_json(*r)};
  if (mempool_.contains(*h)) return {200, json{{"tx_hash", h->hex()}, {"status", "Pending"}}};
  return not_found();
}

Response Node::get_block(std::string_view id) const {
  std::shared_lock lock(mutex_);
  const ledger::Block* block = nullptr;
  if (auto number = parse_u64(id)) {
    block = store_.block_by_number(*number);
  } else if (auto h = parse_id<Digest32>(id)) {
    block = store_.block_by_hash(*h);
  } else {
    return error(400, "BadRequest", "expected a block number or 32-byte 0x-hex hash");
  }
  if (block == nullptr) return not_found();
  return {200, block_view(*block)};
}

Response Node::chain_head() const {
  std::shared_lock lock(mutex_);
  return {200, json{{"height", store_.height()},
                    {"head_hash", store_.state().head.hex()},
                    {"difficulty", store_.state().difficulty},
                    {"chain_id", store_.state().chain_id}}};
}

Response Node::account(std::string_view address) const {
  auto a = parse_id<Address>(address);
  if (!a) return error(400, "BadRequest", "expected a 20-byte 0x-hex address");
  std::shared_lock lock(mutex_);
  const auto* acct = store_.state().find_account(*a);
  return {200, json{{"address", a->hex()},
                    {"nonce", acct ? acct->nonce : 0},
                    {"native_balance", to_decimal(acct ? acct->native_balance : u256(0))},
                    {"pending_nonce", mempool_.pending_nonce(store_.state(), *a)}}};
}

namespace {

template <class Fn>
Response with_contract(const ledger::ChainStore& store, std::string_view contract, Fn&& fn) {
  auto c = Address::from_hex(contract);
  if (!c) return error(400, "BadRequest", "expected a 20-byte 0x-hex contract address");
  auto it = store.state().contracts.find(*c);
  if (it == store.state().contracts.end()) return not_found();
  return fn(it->second);
}

}  // namespace

Response Node::token_meta(std::string_view contract) const {
  std::shared_lock lock(mutex_);
  return with_contract(store_, contract, [&](const token::TokenState& s) {
    json meta = token::meta_to_json(s);
    meta["contract"] = std::string(contract);
    return Response{200, std::move(meta)};
  });
}

Response Node::token_balance(std::string_view contract, std::string_view address) const {
  auto who = Address::from_hex(address);
  if (!who) return error(400, "BadRequest", "expected a 20-byte 0x-hex address");
  std::shared_lock lock(mutex_);
  return with_contract(store_, contract, [&](const token::TokenState& s) {
    const auto* ft = std::get_if<token::FungibleTokenState>(&s);
    if (ft == nullptr) return error(400, "WrongTokenKind");
    return Response{200, json{{"balance", to_decimal(token::balance_of(*ft, *who))}}};
  });
}

Response Node::token_allowance(std::string_view contract, std::string_view owner, std::string_view spender) const {
  auto o = Address::from_hex(owner);
  auto sp = Address::from_hex(spender);
  if (!o || !sp) return error(400, "BadRequest", "expected 20-byte 0x-hex addresses");
  std::shared_lock lock(mutex_);
  return with_contract(store_, contract, [&](const token::TokenState& s) {
    const auto* ft = std::get_if<token::FungibleTokenState>(&s);
    if (ft == nullptr) return error(400, "WrongTokenKind");
    return Response{200, json{{"allowance", to_decimal(token::allowance(*ft, *o, *sp))}}};
  });
}

Response Node::token_nft(std::string_view contract, std::string_view token_id) const {
  auto id = parse_u256(token_id);
  if (!id) return error(400, "BadRequest", "expected a decimal token id");
  std::shared_lock lock(mutex_);
  return with_contract(store_, contract, [&](const token::TokenState& s) {
    const auto* nft = std::get_if<token::NftState>(&s);
    if (nft == nullptr) return error(400, "WrongTokenKind");
    auto owner = token::owner_of(*nft, *id);
    if (std::holds_alternative<token::Revert>(owner)) return error(404, "NoSuchToken");
    const auto approved = std::get<Address>(token::get_approved(*nft, *id));
    return Response{200, json{{"token_id", to_decimal(*id)},
                              {"owner", std::get<Address>(owner).hex()},
                              {"uri", std::get<std::string>(token::token_uri(*nft, *id))},
                              {"approved", approved.is_zero() ? json(nullptr) : json(approved.hex())}}};
  });
}

Response Node::mine(const std::string& body) {
  if (config_.auto_mine) return error(409, "AutoMineEnabled");
  auto parsed = parse_body(body.empty() ? std::string("{}") : body);
  if (!parsed || !parsed->is_object()) return error(422, "Unparseable", "body is not a JSON object");
  std::uint64_t count = 1;
  if (parsed->contains("count")) {
    const auto& c = parsed->at("count");
    if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<std::int64_t>() >= 0))
      return error(400, "BadCount", "count must be a positive integer");
    count = c.get<std::uint64_t>();
  }
  if (count == 0 || count > 10000) return error(400, "BadCount", "count must be between 1 and 10000");
  return {200, mine_blocks(count)};
}

json Node::mine_blocks(std::uint64_t count) {
  json out = json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    std::unique_lock lock(mutex_);
    const auto& parent = store_.head_header();
    auto block = ledger::mine_block(store_.state(), mempool_, parent, store_.state().difficulty,
                                    std::max(now(), parent.timestamp));
    out.push_back(commit_block(block));
  }
  return out;
}

json Node::commit_block(const ledger::Block& block) {
  if (auto err = ledger::verify_block(store_.state(), store_.head_header(), block))
    throw std::logic_error("freshly mined block failed verification: " + err->describe());
  journal_.append(block);
  store_.append(block);
  mempool_.prune(store_.state());
  return block_summary(block);
}

void Node::auto_mine_loop(std::stop_token stop) {
  const auto interval = std::chrono::milliseconds(config_.auto_mine_interval_ms);
  while (!stop.stop_requested()) {
    {
      std::unique_lock wait_lock(wake_mutex_);
      wake_.wait_for(wait_lock, stop, interval, [] { return false; });
    }
    if (stop.stop_requested()) return;

    // Retry until a search completes without being invalidated.
    for (;;) {
      ledger::ChainState snapshot;
      ledger::Mempool pool;
      ledger::BlockHeader parent;
      const auto generation = submissions_.load();
      {
        std::shared_lock lock(mutex_);
        if (mempool_.empty()) break;
        snapshot = store_.state();
        pool = mempool_;
        parent = store_.head_header();
      }
      auto block = ledger::assemble_block(snapshot, pool, parent, snapshot.difficulty,
                                          std::max(now(), parent.timestamp));
      const bool sealed = ledger::seal_header(
          block.header, [&] { return stop.stop_requested() || submissions_.load() != generation; });
      if (stop.stop_requested()) return;
      if (!sealed) continue;

      std::unique_lock lock(mutex_);
      if (store_.state().head != snapshot.head) continue;
      if (ledger::verify_block(store_.state(), store_.head_header(), block)) continue;
      commit_block(block);
      break;
    }
  }
}

}  // namespace wdapp::node
