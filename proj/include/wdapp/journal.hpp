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

// Append-only chain journal. Each line is the canonical encoding of
//   {"entry": E, "link": L}
// where E is one of {"genesis": config}, {"grant": {...}} or {"block": block}
// and L = hash_bytes(previous L || canonical_encode(E)), with 32 zero bytes
// before the first line. Line 1 is always the genesis entry.

#include "wdapp/ledger.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace wdapp::journal {

class TamperedJournal : public std::runtime_error {
 public:
  TamperedJournal(std::size_t line, const std::string& reason)
      : std::runtime_error("TamperedJournal: line " + std::to_string(line) + ": " + reason), line_(line) {}
  /// 1-based.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class JournalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GrantEntry {
  Address to;
  PublicKey public_key;
  u256 amount;
  bool operator==(const GrantEntry&) const = default;
};

using Entry = std::variant<ledger::GenesisConfig, GrantEntry, ledger::Block>;

json entry_to_json(const Entry& entry);
/// Next link value for `entry` following `previous`.
Digest32 chain_link(const Digest32& previous, const Entry& entry);
/// One journal line, newline included.
std::string encode_line(const Entry& entry, const Digest32& previous_link);

/// Rebuilds the store from a journal file, checking byte-exact canonical form,
/// the link chain, and full block verification for every line. Throws
/// TamperedJournal naming the first bad line, JournalError if unreadable.
ledger::ChainStore replay(const std::filesystem::path& path);

class Journal {
 public:
  /// Replays `path` if it has content, otherwise writes a genesis line for
  /// `config`. An existing journal whose chain id or difficulty disagrees
  /// with `config` raises JournalError.
  static std::pair<Journal, ledger::ChainStore> open(const std::filesystem::path& path,
                                                     const ledger::GenesisConfig& config);

  Journal(Journal&& other) noexcept;
  Journal& operator=(Journal&& other) noexcept;
  Journal(const Journal&) = delete;
  Journal& operator=(const Journal&) = delete;
  ~Journal();

  /// Writes one line with a single write(2) followed by fsync.
  void append(const Entry& entry);

  std::size_t lines() const { return lines_; }
  const Digest32& last_link() const { return last_link_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  Journal(std::filesystem::path path, int fd, Digest32 last_link, std::size_t lines);

  std::filesystem::path path_;
  int fd_ = -1;
  Digest32 last_link_;
  std::size_t lines_ = 0;
};

}  // namespace wdapp::journal
