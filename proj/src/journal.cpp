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

#include "wdapp/journal.hpp"
#include "wdapp/overloaded.hpp"

#include "wire.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>

namespace wdapp::journal {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JournalError("cannot read journal " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Entry entry_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw token::DecodeError("entry must have exactly one kind");
  const auto it = j.begin();
  const std::string& kind = it.key();
  const json& body = it.value();
  if (kind == "genesis") return ledger::genesis_from_json(body);
  if (kind == "grant")
    return GrantEntry{wire::address_field(body, "to"), wire::fixed_field<PublicKey>(body, "public_key"),
                      wire::u256_field(body, "amount")};
  if (kind == "block") return ledger::block_from_json(body);
  throw token::DecodeError("unknown entry kind '" + kind + "'");
}

struct Replayed {
  std::optional<ledger::ChainStore> store;
  Digest32 last_link;
  std::size_t lines = 0;
};

Replayed replay_text(const std::string& text) {
  Replayed out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    ++line_no;
    const auto end = text.find('\n', start);
    if (end == std::string::npos) throw TamperedJournal(line_no, "line is not newline-terminated");
    const std::string line = text.substr(start, end - start);
    start = end + 1;

    json parsed;
    try {
      parsed = json::parse(line);
    } catch (const json::parse_error&) {
      throw TamperedJournal(line_no, "not valid JSON");
    }
    Entry entry;
    Digest32 link;
    try {
      if (canonical_encode(parsed) != line) throw TamperedJournal(line_no, "not in canonical form");
      link = wire::fixed_field<Digest32>(parsed, "link");
      entry = entry_from_json(wire::require(parsed, "entry"));
    } catch (const TamperedJournal&) {
      throw;
    } catch (const std::exception& e) {
      throw TamperedJournal(line_no, e.what());
    }
    if (parsed.size() != 2) throw TamperedJournal(line_no, "unexpected fields");
    if (chain_link(out.last_link, entry) != link) throw TamperedJournal(line_no, "link hash mismatch");

    const bool is_genesis = std::holds_alternative<ledger::GenesisConfig>(entry);
    if ((line_no == 1) != is_genesis) throw TamperedJournal(line_no, "genesis must be exactly the first line");

    std::visit(Overloaded{
                   [&](const ledger::GenesisConfig& config) {
                     try {
                       out.store.emplace(config);
                     } catch (const ledger::LedgerError& e) {
                       throw TamperedJournal(line_no, e.what());
                     }
                   },
                   [&](const GrantEntry& g) {
                     if (auto err = out.store->grant(g.to, g.public_key, g.amount))
                       throw TamperedJournal(line_no, "grant rejected: " + std::string(ledger::to_string(*err)));
                   },
                   [&](const ledger::Block& b) {
                     if (auto err = out.store->append(b))
                       throw TamperedJournal(line_no, "block rejected: " + err->describe());
                   },
               },
               entry);
    out.last_link = link;
    out.lines = line_no;
  }
  return out;
}

void write_all(int fd, const std::string& data, const std::filesystem::path& path) {
  std::size_t done = 0;
  while (done < data.size()) {
    const auto n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw JournalError("write to " + path.string() + " failed: " + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) throw JournalError("fsync of " + path.string() + " failed: " + std::strerror(errno));
}

}  // namespace

json entry_to_json(const Entry& entry) {
  return std::visit(Overloaded{
                        [](const ledger::GenesisConfig& c) { return json{{"genesis", ledger::genesis_to_json(c)}}; },
                        [](const GrantEntry& g) {
                          return json{{"grant",
                                       {{"to", g.to.hex()},
                                        {"public_key", g.public_key.hex()},
                                        {"amount", to_decimal(g.amount)}}}};
                        },
                        [](const ledger::Block& b) { return json{{"block", ledger::block_to_json(b)}}; },
                    },
                    entry);
}

Digest32 chain_link(const Digest32& previous, const Entry& entry) {
  std::string buf(previous.bytes.begin(), previous.bytes.end());
  buf += canonical_encode(entry_to_json(entry));
  return hash_bytes(buf);
}

std::string encode_line(const Entry& entry, const Digest32& previous_link) {
  const json line = {{"entry", entry_to_json(entry)}, {"link", chain_link(previous_link, entry).hex()}};
  return canonical_encode(line) + "\n";
}

ledger::ChainStore replay(const std::filesystem::path& path) {
  auto replayed = replay_text(read_file(path));
  if (!replayed.store) throw JournalError("journal " + path.string() + " is empty");
  return std::move(*replayed.store);
}

Journal::Journal(std::filesystem::path path, int fd, Digest32 last_link, std::size_t lines)
    : path_(std::move(path)), fd_(fd), last_link_(last_link), lines_(lines) {}

Journal::Journal(Journal&& other) noexcept
    : path_(std::move(other.path_)), fd_(std::exchange(other.fd_, -1)), last_link_(other.last_link_),
      lines_(other.lines_) {}

Journal& Journal::operator=(Journal&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    path_ = std::move(other.path_);
    fd_ = std::exchange(other.fd_, -1);
    last_link_ = other.last_link_;
    lines_ = other.lines_;
  }
  return *this;
}

Journal::~Journal() {
  if (fd_ >= 0) ::close(fd_);
}

std::pair<Journal, ledger::ChainStore> Journal::open(const std::filesystem::path& path,
                                                     const ledger::GenesisConfig& config) {
  std::string text;
  if (std::filesystem::exists(path)) text = read_file(path);

  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw JournalError("cannot open journal " + path.string() + ": " + std::strerror(errno));

  if (text.empty()) {
    ledger::ChainStore store(config);
    Journal journal(path, fd, Digest32{}, 0);
    journal.append(config);
    return {std::move(journal), std::move(store)};
  }

  Journal journal(path, fd, Digest32{}, 0);
  auto replayed = replay_text(text);
  const auto& found = replayed.store->genesis_config();
  if (found.chain_id != config.chain_id || found.difficulty != config.difficulty)
    throw JournalError("journal was written for chain_id " + std::to_string(found.chain_id) + " difficulty " +
                       std::to_string(found.difficulty) + ", configuration asks for chain_id " +
                       std::to_string(config.chain_id) + " difficulty " + std::to_string(config.difficulty));
  journal.last_link_ = replayed.last_link;
  journal.lines_ = replayed.lines;
  return {std::move(journal), std::move(*replayed.store)};
}

void Journal::append(const Entry& entry) {
  const auto line = encode_line(entry, last_link_);
  write_all(fd_, line, path_);
  last_link_ = chain_link(last_link_, entry);
  ++lines_;
}

}  // namespace wdapp::journal
