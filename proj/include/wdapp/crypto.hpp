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

#include "wdapp/bytes.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace wdapp {

using Digest32 = FixedBytes<32, struct DigestTag>;
using Address = FixedBytes<20, struct AddressTag>;
using Signature = FixedBytes<64, struct SignatureTag>;
using PublicKey = FixedBytes<32, struct PublicKeyTag>;
/// Ed25519 seed; the expanded signing key is recomputed on demand.
using PrivateKey = FixedBytes<32, struct PrivateKeyTag>;
using Seed = PrivateKey;

struct KeyPair {
  PrivateKey private_key;
  PublicKey public_key;

  bool operator==(const KeyPair&) const = default;
};

class SeedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KeyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// SHA-256.
Digest32 hash_bytes(std::span<const std::uint8_t> data);
Digest32 hash_bytes(std::string_view data);

KeyPair generate_keypair();
KeyPair generate_keypair(const Seed& seed);
/// Throws SeedError unless `seed` is exactly 32 bytes.
KeyPair generate_keypair(std::span<const std::uint8_t> seed);

/// Last 20 bytes of hash_bytes(public_key). Throws KeyError for anything that
/// is not a valid Ed25519 point encoding.
Address derive_address(std::span<const std::uint8_t> public_key);
inline Address derive_address(const PublicKey& public_key) { return derive_address(public_key.span()); }

/// Deterministic (RFC 8032) Ed25519 signature over the 32 digest bytes.
Signature sign_digest(const PrivateKey& private_key, const Digest32& digest);

/// Never throws; any malformed input yields false.
bool verify_signature(std::span<const std::uint8_t> public_key, const Digest32& digest, const Signature& sig) noexcept;
inline bool verify_signature(const PublicKey& public_key, const Digest32& digest, const Signature& sig) noexcept {
  return verify_signature(public_key.span(), digest, sig);
}

/// Leading-zero-bit test: true iff `digest`, read as a big-endian integer, is
/// below 2^(256 - difficulty).
bool meets_difficulty(const Digest32& digest, unsigned difficulty) noexcept;

}  // namespace wdapp
