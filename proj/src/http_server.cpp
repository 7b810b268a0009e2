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

#include "wdapp/http_server.hpp"

#include <httplib.h>

namespace wdapp::node {
namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(Node& node, std::string cors_origin)
    : node_(node), cors_origin_(std::move(cors_origin)), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;

  if (!cors_origin_.empty()) {
    s.set_default_headers({{"Access-Control-Allow-Origin", cors_origin_},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
    s.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }

  s.Post("/faucet", [this](const httplib::Request& req, httplib::Response& res) { send(res, node_.faucet(req.body)); });
  s.Post("/tx", [this](const httplib::Request& req, httplib::Response& res) { send(res, node_.submit(req.body)); });
  s.Post("/mine", [this](const httplib::Request& req, httplib::Response& res) { send(res, node_.mine(req.body)); });

  s.Get(R"(/tx/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.get_tx(req.matches[1].str()));
  });
  s.Get(R"(/block/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.get_block(req.matches[1].str()));
  });
  s.Get("/chain/head", [this](const httplib::Request&, httplib::Response& res) { send(res, node_.chain_head()); });
  s.Get(R"(/account/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.account(req.matches[1].str()));
  });
  s.Get(R"(/token/([^/]+)/meta)", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.token_meta(req.matches[1].str()));
  });
  s.Get(R"(/token/([^/]+)/balance/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.token_balance(req.matches[1].str(), req.matches[2].str()));
  });
  s.Get(R"(/token/([^/]+)/allowance/([^/]+)/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.token_allowance(req.matches[1].str(), req.matches[2].str(), req.matches[3].str()));
  });
  s.Get(R"(/token/([^/]+)/nft/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, node_.token_nft(req.matches[1].str(), req.matches[2].str()));
  });

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      const json body = {{"error", res.status == 404 ? "NotFound" : "HttpError"}};
      res.set_content(body.dump(), "application/json");
    }
  });
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "unknown error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(json{{"error", "Internal"}, {"detail", what}}.dump(), "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_ && server_->is_running()) server_->stop();
}

}  // namespace wdapp::node
