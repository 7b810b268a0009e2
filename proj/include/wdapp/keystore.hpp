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

// Plaintext local keystore: a JSON array of
//   {"address", "public_key", "private_key", "label"?}
// records, all hex. Simulation tool only; keys are not encrypted.

#include "wdapp/crypto.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdapp::cli {

class KeystoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyRecord {
  Address address;
  PublicKey public_key;
  PrivateKey private_key;
  std::string label;
};

class Keystore {
 public:
  /// Missing file loads as empty. Throws KeystoreError on malformed content,
  /// duplicate addresses or labels, or an address that does not match its key.
  static Keystore load(const std::filesystem::path& path);

  /// Writes via a temporary file and rename, mode 0600.
  void save() const;

  const KeyRecord& add(const KeyPair& keys, std::string label = {});
  /// Lookup by label or by address (hex, any case).
  const KeyRecord* find(std::string_view name_or_address) const;
  const std::vector<KeyRecord>& records() const { return records_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::vector<KeyRecord> records_;
};

}  // namespace wdapp::cli
