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

#include "wdapp/cli.hpp"
#include "wdapp/keystore.hpp"
#include "wdapp/ledger.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

namespace wdapp::cli {
namespace {

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

struct Reply {
  int status;
  json body;
};

class NodeClient {
 public:
  explicit NodeClient(const std::string& url) : url_(url), client_(url) {
    client_.set_connection_timeout(std::chrono::seconds(3));
    client_.set_read_timeout(std::chrono::seconds(60));
  }

  Reply get(const std::string& path) { return finish(client_.Get(path)); }
  Reply post(const std::string& path, const json& body) {
    return finish(client_.Post(path, body.dump(), "application/json"));
  }

 private:
  Reply finish(const httplib::Result& result) {
    if (!result) fail(kUnreachable, "node unreachable at " + url_ + ": " + httplib::to_string(result.error()));
    json body;
    try {
      body = json::parse(result->body);
    } catch (const json::parse_error&) {
      body = json{{"error", "BadResponse"}, {"detail", result->body}};
    }
    return {result->status, std::move(body)};
  }

  std::string url_;
  httplib::Client client_;
};

std::string error_code(const Reply& r) {
  if (r.body.is_object() && r.body.contains("error") && r.body["error"].is_string())
    return r.body["error"].get<std::string>();
  return "HTTP " + std::to_string(r.status);
}

/// Any non-2xx reply is a domain error carrying the node's code verbatim.
json expect_ok(const Reply& r) {
  if (r.status < 200 || r.status >= 300) {
    std::string msg = error_code(r);
    if (r.body.is_object() && r.body.contains("detail") && r.body["detail"].is_string())
      msg += ": " + r.body["detail"].get<std::string>();
    fail(kDomainError, msg);
  }
  return r.body;
}

u256 parse_amount(const std::string& text, const char* what) {
  auto v = parse_u256(text);
  if (!v) fail(kDomainError, std::string("invalid ") + what + " '" + text + "'");
  return *v;
}

struct Context {
  std::string node_url = kDefaultNode;
  std::string keystore_path = kDefaultKeystore;
  bool json_output = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  std::optional<Keystore> keystore_cache;
  std::optional<NodeClient> client_cache;

  Keystore& keystore() {
    if (!keystore_cache) {
      try {
        keystore_cache = Keystore::load(keystore_path);
      } catch (const std::exception& e) {
        fail(kKeystoreFault, e.what());
      }
    }
    return *keystore_cache;
  }

  NodeClient& client() {
    if (!client_cache) client_cache.emplace(node_url);
    return *client_cache;
  }

  const KeyRecord& signer(const std::string& name) {
    const auto* rec = keystore().find(name);
    if (rec == nullptr) fail(kKeystoreFault, "no key for '" + name + "' in keystore " + keystore_path);
    return *rec;
  }

  /// Keystore label, or a literal 20-byte hex address.
  Address resolve(const std::string& name) {
    if (const auto* rec = keystore().find(name)) return rec->address;
    auto raw = parse_hex_lenient(name);
    if (!raw || raw->size() != Address::size) fail(kDomainError, "not an address or keystore label: '" + name + "'");
    return *Address::from_span(*raw);
  }

  void print_json(const json& j) { *out << (json_output ? j.dump() : j.dump(2)) << "\n"; }
};

struct TxOptions {
  std::string from;
  std::optional<std::uint64_t> gas_limit;
  std::string gas_price = "1";
  bool wait = false;
  double timeout_s = 30;
};

void add_tx_options(CLI::App* cmd, TxOptions& o) {
  cmd->add_option("--from", o.from, "Signing address or keystore label")->required();
  cmd->add_option("--gas-limit", o.gas_limit, "Gas limit (default: fixed cost of the action)");
  cmd->add_option("--gas-price", o.gas_price, "Gas price in native units")->capture_default_str();
  cmd->add_flag("--wait", o.wait, "Poll until the transaction is mined and print its receipt");
  cmd->add_option("--timeout", o.timeout_s, "Seconds to wait with --wait")->capture_default_str();
}

int send_transaction(Context& ctx, const TxOptions& o, ledger::Action action) {
  const KeyRecord& key = ctx.signer(o.from);
  auto& client = ctx.client();
  const json head = expect_ok(client.get("/chain/head"));
  const json account = expect_ok(client.get("/account/" + key.address.hex()));

  ledger::Transaction tx;
  tx.chain_id = head.at("chain_id").get<std::uint64_t>();
  tx.from = key.address;
  tx.nonce = account.at("pending_nonce").get<std::uint64_t>();
  tx.action = std::move(action);
  tx.gas_limit = o.gas_limit.value_or(ledger::gas_cost(tx.action));
  tx.gas_price = parse_amount(o.gas_price, "gas price");
  ledger::sign_transaction(tx, key.private_key);
  const Digest32 local_hash = ledger::tx_hash(tx);

  const json accepted = expect_ok(client.post("/tx", ledger::tx_to_json(tx)));
  const std::string node_hash = accepted.at("tx_hash").get<std::string>();
  if (node_hash != local_hash.hex())
    fail(kDomainError, "node reported tx_hash " + node_hash + " but the local hash is " + local_hash.hex());

  json result = {{"tx_hash", node_hash}};
  const bool deploy = std::holds_alternative<ledger::DeployFungible>(tx.action) ||
                      std::holds_alternative<ledger::DeployNft>(tx.action);
  if (deploy) result["contract_address"] = token::contract_address(tx.from, tx.nonce).hex();

  if (!o.wait) {
    if (ctx.json_output) {
      ctx.print_json(result);
    } else {
      *ctx.out << "tx_hash: " << node_hash << "\n";
      if (deploy) *ctx.out << "contract: " << result["contract_address"].get<std::string>() << "\n";
    }
    return kSuccess;
  }

  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(o.timeout_s);
  json receipt;
  for (;;) {
    receipt = expect_ok(client.get("/tx/" + node_hash));
    if (receipt.value("status", "") != "Pending") break;
    if (std::chrono::steady_clock::now() > deadline) fail(kDomainError, "Timeout: " + node_hash + " still pending");
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  result["receipt"] = receipt;
  if (ctx.json_output) {
    ctx.print_json(result);
  } else {
    *ctx.out << "tx_hash: " << node_hash << "\n";
    if (deploy) *ctx.out << "contract: " << result["contract_address"].get<std::string>() << "\n";
    *ctx.out << "status: " << receipt.value("status", "") << "\n"
             << "block: " << receipt.value("block_number", std::uint64_t{0}) << "\n"
             << "gas_used: " << receipt.value("gas_used", std::uint64_t{0}) << "\n";
    if (receipt.contains("error")) *ctx.out << "error: " << receipt["error"].get<std::string>() << "\n";
  }
  if (receipt.value("status", "") == "Reverted") fail(kDomainError, receipt.value("error", std::string("Reverted")));
  return kSuccess;
}

int show(Context& ctx, const std::string& path) {
  ctx.print_json(expect_ok(ctx.client().get(path)));
  return kSuccess;
}


}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app{"WDApp command-line wallet, token and explorer client", "wdapp"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--node", ctx.node_url, "Node URL")->capture_default_str();
  app.add_option("--keystore", ctx.keystore_path, "Keystore file")->capture_default_str();
  app.add_flag("--json", ctx.json_output, "Machine-readable output");

  std::function<int()> action;

  // wallet ------------------------------------------------------------------
  auto* wallet = app.add_subcommand("wallet", "Local keys and funding");
  wallet->require_subcommand(1);

  std::string new_label;
  auto* wallet_new = wallet->add_subcommand("new", "Generate a key pair and store it");
  wallet_new->add_option("--label", new_label, "Optional name usable wherever an address is expected");
  wallet_new->callback([&] {
    action = [&] {
      auto& ks = ctx.keystore();
      const bool fresh = ks.records().empty() && !std::filesystem::exists(ctx.keystore_path);
      const KeyRecord* rec = nullptr;
      try {
        rec = &ks.add(generate_keypair(), new_label);
        ks.save();
      } catch (const KeystoreError& e) {
        fail(kKeystoreFault, e.what());
      }
      if (fresh)
        *ctx.err << "WARNING: " << ctx.keystore_path
                 << " stores private keys in PLAINTEXT. Use it for simulation only.\n";
      if (ctx.json_output)
        ctx.print_json({{"address", rec->address.hex()}, {"label", rec->label}});
      else
        *ctx.out << rec->address.hex() << "\n";
      return kSuccess;
    };
  });

  auto* wallet_list = wallet->add_subcommand("list", "Show keystore addresses with live balances");
  wallet_list->callback([&] {
    action = [&] {
      json rows = json::array();
      for (const auto& rec : ctx.keystore().records()) {
        const json acct = expect_ok(ctx.client().get("/account/" + rec.address.hex()));
        rows.push_back({{"address", rec.address.hex()},
                        {"label", rec.label},
                        {"native_balance", acct.at("native_balance")},
                        {"nonce", acct.at("nonce")}});
      }
      if (ctx.json_output) {
        ctx.print_json(rows);
      } else {
        for (const auto& row : rows) {
          *ctx.out << row["address"].get<std::string>() << "  " << row["native_balance"].get<std::string>();
          if (!row["label"].get<std::string>().empty()) *ctx.out << "  (" << row["label"].get<std::string>() << ")";
          *ctx.out << "\n";
        }
      }
      return kSuccess;
    };
  });

  std::string fund_to;
  auto* wallet_fund = wallet->add_subcommand("fund", "Request a faucet grant for a keystore address");
  wallet_fund->add_option("--to", fund_to, "Keystore address or label")->required();
  wallet_fund->callback([&] {
    action = [&] {
      const KeyRecord& rec = ctx.signer(fund_to);
      const json body = expect_ok(
          ctx.client().post("/faucet", {{"to", rec.address.hex()}, {"public_key", rec.public_key.hex()}}));
      if (ctx.json_output)
        ctx.print_json(body);
      else
        *ctx.out << rec.address.hex() << " balance " << body.at("balance").get<std::string>() << "\n";
      return kSuccess;
    };
  });

  // token -------------------------------------------------------------------
  auto* tokens = app.add_subcommand("token", "Deploy, transact with and inspect tokens");
  tokens->require_subcommand(1);

  TxOptions txo;
  std::string name, symbol, supply, contract, to, amount, spender, owner, token_id, uri, address, approved_addr,
      new_owner, operator_addr;
  unsigned decimals = 18;
  bool approve_flag = true;

  auto tx_cmd = [&](const char* cmd_name, const char* help, auto configure, auto build) {
    auto* cmd = tokens->add_subcommand(cmd_name, help);
    configure(cmd);
    add_tx_options(cmd, txo);
    cmd->callback([&, build] { action = [&, build] { return send_transaction(ctx, txo, build()); }; });
    return cmd;
  };
  auto need_contract = [&](CLI::App* cmd) { cmd->add_option("--contract", contract, "Token contract address")->required(); };
  auto contract_addr = [&] { return ctx.resolve(contract); };

  tx_cmd(
      "deploy-ft", "Deploy a fungible token",
      [&](CLI::App* cmd) {
        cmd->add_option("--name", name)->required();
        cmd->add_option("--symbol", symbol)->required();
        cmd->add_option("--decimals", decimals)->capture_default_str();
        cmd->add_option("--supply", supply, "Total supply in base units")->required();
      },
      [&]() -> ledger::Action { return ledger::DeployFungible{name, symbol, decimals, parse_amount(supply, "supply")}; });

  tx_cmd(
      "deploy-nft", "Deploy a non-fungible token registry",
      [&](CLI::App* cmd) {
        cmd->add_option("--name", name)->required();
        cmd->add_option("--symbol", symbol)->required();
      },
      [&]() -> ledger::Action { return ledger::DeployNft{name, symbol}; });

  tx_cmd(
      "transfer", "Transfer fungible tokens",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--to", to)->required();
        cmd->add_option("--amount", amount)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(), token::FtTransfer{ctx.resolve(to), parse_amount(amount, "amount")}};
      });

  tx_cmd(
      "approve", "Set a spender allowance",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--spender", spender)->required();
        cmd->add_option("--amount", amount)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(),
                                       token::FtApprove{ctx.resolve(spender), parse_amount(amount, "amount")}};
      });

  tx_cmd(
      "transfer-from", "Spend from another holder's balance using an allowance",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--owner", owner, "Holder whose tokens move")->required();
        cmd->add_option("--to", to)->required();
        cmd->add_option("--amount", amount)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{
            contract_addr(), token::FtTransferFrom{ctx.resolve(owner), ctx.resolve(to), parse_amount(amount, "amount")}};
      });

  tx_cmd(
      "mint", "Mint fungible tokens (contract owner only)",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--to", to)->required();
        cmd->add_option("--amount", amount)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(), token::FtMint{ctx.resolve(to), parse_amount(amount, "amount")}};
      });

  tx_cmd(
      "burn", "Burn fungible tokens from the sender's balance",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--amount", amount)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(), token::FtBurn{parse_amount(amount, "amount")}};
      });

  tx_cmd(
      "transfer-ownership", "Hand contract ownership to another address",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--new-owner", new_owner)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(), token::TransferOwnership{ctx.resolve(new_owner)}};
      });

  tx_cmd(
      "nft-mint", "Mint a non-fungible token (contract owner only)",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--to", to)->required();
        cmd->add_option("--token-id", token_id)->required();
        cmd->add_option("--uri", uri)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(),
                                       token::NftMint{ctx.resolve(to), parse_amount(token_id, "token id"), uri}};
      });

  tx_cmd(
      "nft-transfer", "Transfer a non-fungible token",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--owner", owner, "Current holder (defaults to --from)");
        cmd->add_option("--to", to)->required();
        cmd->add_option("--token-id", token_id)->required();
      },
      [&]() -> ledger::Action {
        const Address holder = ctx.resolve(owner.empty() ? txo.from : owner);
        return ledger::TokenCallAction{contract_addr(),
                                       token::NftTransferFrom{holder, ctx.resolve(to), parse_amount(token_id, "token id")}};
      });

  tx_cmd(
      "nft-approve", "Approve an address for one token (zero address clears)",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--approved", approved_addr)->required();
        cmd->add_option("--token-id", token_id)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(),
                                       token::NftApprove{ctx.resolve(approved_addr), parse_amount(token_id, "token id")}};
      });

  tx_cmd(
      "nft-approve-all", "Grant or revoke an operator for all of the sender's tokens",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--operator", operator_addr)->required();
        cmd->add_option("--approved", approve_flag)->capture_default_str();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(),
                                       token::NftSetApprovalForAll{ctx.resolve(operator_addr), approve_flag}};
      });

  tx_cmd(
      "nft-burn", "Burn a non-fungible token (holder only)",
      [&](CLI::App* cmd) {
        need_contract(cmd);
        cmd->add_option("--token-id", token_id)->required();
      },
      [&]() -> ledger::Action {
        return ledger::TokenCallAction{contract_addr(), token::NftBurn{parse_amount(token_id, "token id")}};
      });

  auto* balance = tokens->add_subcommand("balance", "Fungible balance of an address");
  need_contract(balance);
  balance->add_option("--address", address)->required();
  balance->callback([&] {
    action = [&] { return show(ctx, "/token/" + contract_addr().hex() + "/balance/" + ctx.resolve(address).hex()); };
  });

  auto* allowance = tokens->add_subcommand("allowance", "Remaining allowance of spender over owner");
  need_contract(allowance);
  allowance->add_option("--owner", owner)->required();
  allowance->add_option("--spender", spender)->required();
  allowance->callback([&] {
    action = [&] {
      return show(ctx, "/token/" + contract_addr().hex() + "/allowance/" + ctx.resolve(owner).hex() + "/" +
                           ctx.resolve(spender).hex());
    };
  });

  auto* meta = tokens->add_subcommand("meta", "Token metadata");
  need_contract(meta);
  meta->callback([&] { action = [&] { return show(ctx, "/token/" + contract_addr().hex() + "/meta"); }; });

  auto* nft_owner = tokens->add_subcommand("nft-owner", "Owner, URI and approval of one token");
  need_contract(nft_owner);
  nft_owner->add_option("--token-id", token_id)->required();
  nft_owner->callback([&] {
    action = [&] {
      return show(ctx, "/token/" + contract_addr().hex() + "/nft/" + to_decimal(parse_amount(token_id, "token id")));
    };
  });

  // chain -------------------------------------------------------------------
  auto* chain = app.add_subcommand("chain", "Explorer queries and manual mining");
  chain->require_subcommand(1);

  auto* head = chain->add_subcommand("head", "Height, head hash and difficulty");
  head->callback([&] { action = [&] { return show(ctx, "/chain/head"); }; });

  std::string block_id;
  auto* block = chain->add_subcommand("block", "Block by number or hash");
  block->add_option("id", block_id)->required();
  block->callback([&] { action = [&] { return show(ctx, "/block/" + block_id); }; });

  std::string tx_id;
  auto* tx = chain->add_subcommand("tx", "Receipt (or Pending) for a transaction hash");
  tx->add_option("hash", tx_id)->required();
  tx->callback([&] {
    action = [&] {
      std::string h = tx_id;
      std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
      return show(ctx, "/tx/" + h);
    };
  });

  std::uint64_t count = 1;
  auto* mine = chain->add_subcommand("mine", "Mine blocks on a manual-mining node");
  mine->add_option("--count", count)->capture_default_str();
  mine->callback([&] {
    action = [&] {
      const json blocks = expect_ok(ctx.client().post("/mine", {{"count", count}}));
      if (ctx.json_output) {
        ctx.print_json(blocks);
      } else {
        for (const auto& b : blocks)
          *ctx.out << "block " << b.at("number").get<std::uint64_t>() << "  " << b.at("hash").get<std::string>()
                   << "  txs=" << b.at("tx_count").get<std::uint64_t>() << "  nonce=" << b.at("nonce").get<std::uint64_t>()
                   << "\n";
      }
      return kSuccess;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kDomainError;
  }

  if (!action) return kDomainError;
  try {
    return action();
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace wdapp::cli
