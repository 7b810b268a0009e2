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

#include "wdapp/keystore.hpp"
#include "wdapp/canonical.hpp"

#include <sys/stat.h>

#include <fstream>
#include <set>

namespace wdapp::cli {
namespace {

template <class Fixed>
Fixed hex_field(const json& rec, const char* key, std::size_t index) {
  if (!rec.contains(key) || !rec.at(key).is_string())
    throw KeystoreError("keystore record " + std::to_string(index) + " lacks '" + key + "'");
  auto parsed = Fixed::from_hex(rec.at(key).get<std::string>());
  if (!parsed) throw KeystoreError("keystore record " + std::to_string(index) + " has malformed '" + key + "'");
  return *parsed;
}

}  // namespace

Keystore Keystore::load(const std::filesystem::path& path) {
  Keystore ks;
  ks.path_ = path;
  if (!std::filesystem::exists(path)) return ks;

  std::ifstream in(path);
  if (!in) throw KeystoreError("cannot read keystore " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw KeystoreError("keystore " + path.string() + " is corrupt: " + e.what());
  }
  if (!doc.is_array()) throw KeystoreError("keystore " + path.string() + " must hold a JSON array");

  std::set<Address> seen;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& rec = doc[i];
    if (!rec.is_object()) throw KeystoreError("keystore record " + std::to_string(i) + " is not an object");
    KeyRecord r;
    r.address = hex_field<Address>(rec, "address", i);
    r.public_key = hex_field<PublicKey>(rec, "public_key", i);
    r.private_key = hex_field<PrivateKey>(rec, "private_key", i);
    if (rec.contains("label") && rec.at("label").is_string()) r.label = rec.at("label").get<std::string>();

    if (generate_keypair(r.private_key).public_key != r.public_key)
      throw KeystoreError("keystore record " + std::to_string(i) + ": private key does not match public key");
    if (derive_address(r.public_key) != r.address)
      throw KeystoreError("keystore record " + std::to_string(i) + ": address does not match public key");
    if (!seen.insert(r.address).second)
      throw KeystoreError("keystore has duplicate address " + r.address.hex());
    if (!r.label.empty() && !labels.insert(r.label).second)
      throw KeystoreError("keystore has duplicate label '" + r.label + "'");
    ks.records_.push_back(std::move(r));
  }
  return ks;
}

void Keystore::save() const {
  json doc = json::array();
  for (const auto& r : records_) {
    json rec = {{"address", r.address.hex()},
                {"public_key", r.public_key.hex()},
                {"private_key", r.private_key.hex()}};
    if (!r.label.empty()) rec["label"] = r.label;
    doc.push_back(std::move(rec));
  }
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw KeystoreError("cannot write keystore " + tmp.string());
    out << doc.dump(2) << "\n";
    if (!out.flush()) throw KeystoreError("cannot write keystore " + tmp.string());
  }
  ::chmod(tmp.c_str(), 0600);
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw KeystoreError("cannot replace keystore " + path_.string() + ": " + ec.message());
}

const KeyRecord& Keystore::add(const KeyPair& keys, std::string label) {
  const Address address = derive_address(keys.public_key);
  if (find(address.hex())) throw KeystoreError("address " + address.hex() + " already in keystore");
  if (!label.empty() && find(label)) throw KeystoreError("label '" + label + "' already in keystore");
  records_.push_back(KeyRecord{address, keys.public_key, keys.private_key, std::move(label)});
  return records_.back();
}

const KeyRecord* Keystore::find(std::string_view name_or_address) const {
  for (const auto& r : records_)
    if (!r.label.empty() && r.label == name_or_address) return &r;
  auto raw = parse_hex_lenient(name_or_address);
  if (raw && raw->size() == Address::size) {
    auto address = Address::from_span(*raw);
    for (const auto& r : records_)
      if (r.address == *address) return &r;
  }
  return nullptr;
}

}  // namespace wdapp::cli
