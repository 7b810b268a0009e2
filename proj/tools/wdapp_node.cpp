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

// wdapp-node: single-node chain with an HTTP/JSON API.

#include "wdapp/http_server.hpp"
#include "wdapp/node.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kJournal = 3, kBind = 4 };

wdapp::node::NodeConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wdapp::node::ConfigError("cannot read config file " + path);
  wdapp::json j;
  try {
    j = wdapp::json::parse(in);
  } catch (const wdapp::json::parse_error& e) {
    throw wdapp::node::ConfigError("config file " + path + " is not JSON: " + e.what());
  }
  return wdapp::node::config_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WDApp simulated chain node"};

  std::string config_path;
  if (const char* env = std::getenv("NODE_CONFIG")) config_path = env;
  std::optional<std::uint64_t> chain_id;
  std::optional<unsigned> difficulty;
  std::optional<std::string> host;
  std::optional<int> port;
  std::optional<std::string> journal;
  std::optional<bool> auto_mine;
  std::optional<std::uint64_t> interval_ms;
  std::optional<std::string> faucet_grant;
  std::optional<std::string> cors_origin;

  app.add_option("--config", config_path, "JSON config file (default: $NODE_CONFIG)");
  app.add_option("--chain-id", chain_id, "Chain id");
  app.add_option("--difficulty", difficulty, "Proof-of-work difficulty in leading zero bits (0-32)");
  app.add_option("--host", host, "Listen address");
  app.add_option("--port", port, "Listen port (0 picks a free one)");
  app.add_option("--journal", journal, "Journal file path");
  app.add_option("--auto-mine", auto_mine, "Seal a block every interval while the mempool is non-empty");
  app.add_option("--auto-mine-interval-ms", interval_ms, "Auto-mine interval in milliseconds");
  app.add_option("--faucet-grant", faucet_grant, "Native units credited per faucet call");
  app.add_option("--cors-origin", cors_origin, "Access-Control-Allow-Origin value; empty disables CORS");
  CLI11_PARSE(app, argc, argv);

  wdapp::node::NodeConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    if (chain_id) config.chain_id = *chain_id;
    if (difficulty) config.difficulty = *difficulty;
    if (host) config.host = *host;
    if (port) {
      if (*port < 0 || *port > 65535) throw wdapp::node::ConfigError("port out of range");
      config.port = static_cast<std::uint16_t>(*port);
    }
    if (journal) config.journal = *journal;
    if (auto_mine) config.auto_mine = *auto_mine;
    if (interval_ms) config.auto_mine_interval_ms = *interval_ms;
    if (faucet_grant) {
      auto grant = wdapp::parse_u256(*faucet_grant);
      if (!grant) throw wdapp::node::ConfigError("faucet grant must be a decimal integer");
      config.faucet_grant = *grant;
    }
    if (cors_origin) config.cors_origin = *cors_origin;
    config.validate();
  } catch (const wdapp::node::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }

  // Signals are consumed by a dedicated thread so shutdown runs outside a handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  std::unique_ptr<wdapp::node::Node> node;
  try {
    node = std::make_unique<wdapp::node::Node>(config);
  } catch (const wdapp::journal::TamperedJournal& e) {
    std::cerr << "error: refusing to start: " << e.what() << "\n";
    return kJournal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kJournal;
  }

  wdapp::node::HttpServer server(*node, config.cors_origin);
  const int bound = server.bind(config.host, config.port);
  if (bound < 0) {
    std::cerr << "error: cannot bind " << config.host << ":" << config.port << "\n";
    return kBind;
  }

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });

  std::cout << "wdapp-node listening on " << config.host << ":" << bound << " (chain " << config.chain_id
            << ", difficulty " << config.difficulty << ", height " << node->height() << ", "
            << (config.auto_mine ? "auto-mine" : "manual mining") << ")" << std::endl;
  server.listen_after_bind();

  // Wake the signal thread if the server stopped for another reason.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  node->stop_auto_mine();
  return kOk;
}
