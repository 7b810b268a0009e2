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

#include "wdapp/node.hpp"

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace wdapp::node {

/// HTTP/JSON front of a Node. Routes:
///   POST /faucet                 GET /tx/{hash}
///   POST /tx                     GET /block/{number|hash}
///   POST /mine                   GET /chain/head
///   GET  /account/{address}      GET /token/{contract}/meta
///   GET  /token/{contract}/balance/{address}
///   GET  /token/{contract}/allowance/{owner}/{spender}
///   GET  /token/{contract}/nft/{token_id}
class HttpServer {
 public:
  HttpServer(Node& node, std::string cors_origin);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  Node& node_;
  std::string cors_origin_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace wdapp::node
