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

#include "wdapp/crypto.hpp"

#include <sodium.h>

#include <mutex>

namespace wdapp {
namespace {

void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
  });
}

}  // namespace

Digest32 hash_bytes(std::span<const std::uint8_t> data) {
  ensure_sodium();
  Digest32 out;
  crypto_hash_sha256(out.bytes.data(), data.data(), data.size());
  return out;
}

Digest32 hash_bytes(std::string_view data) {
  return hash_bytes(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

KeyPair generate_keypair(const Seed& seed) {
  ensure_sodium();
  std::array<std::uint8_t, crypto_sign_SECRETKEYBYTES> expanded{};
  KeyPair kp;
  kp.private_key = seed;
  crypto_sign_seed_keypair(kp.public_key.bytes.data(), expanded.data(), seed.bytes.data());
  sodium_memzero(expanded.data(), expanded.size());
  return kp;
}

KeyPair generate_keypair(std::span<const std::uint8_t> seed) {
  auto fixed = Seed::from_span(seed);
  if (!fixed) throw SeedError("seed must be 32 bytes, got " + std::to_string(seed.size()));
  return generate_keypair(*fixed);
}

KeyPair generate_keypair() {
  ensure_sodium();
  Seed seed;
  randombytes_buf(seed.bytes.data(), seed.bytes.size());
  return generate_keypair(seed);
}

Address derive_address(std::span<const std::uint8_t> public_key) {
  ensure_sodium();
  if (public_key.size() != crypto_sign_PUBLICKEYBYTES)
    throw KeyError("public key must be 32 bytes, got " + std::to_string(public_key.size()));
  if (crypto_core_ed25519_is_valid_point(public_key.data()) != 1) throw KeyError("public key is not a valid point");
  const auto digest = hash_bytes(public_key);
  Address out;
  std::copy(digest.bytes.end() - Address::size, digest.bytes.end(), out.bytes.begin());
  return out;
}

Signature sign_digest(const PrivateKey& private_key, const Digest32& digest) {
  ensure_sodium();
  std::array<std::uint8_t, crypto_sign_PUBLICKEYBYTES> pk{};
  std::array<std::uint8_t, crypto_sign_SECRETKEYBYTES> sk{};
  crypto_sign_seed_keypair(pk.data(), sk.data(), private_key.bytes.data());
  Signature sig;
  crypto_sign_detached(sig.bytes.data(), nullptr, digest.bytes.data(), digest.bytes.size(), sk.data());
  sodium_memzero(sk.data(), sk.size());
  return sig;
}

bool verify_signature(std::span<const std::uint8_t> public_key, const Digest32& digest,
                      const Signature& sig) noexcept {
  try {
    ensure_sodium();
  } catch (...) {
    return false;
  }
  if (public_key.size() != crypto_sign_PUBLICKEYBYTES) return false;
  return crypto_sign_verify_detached(sig.bytes.data(), digest.bytes.data(), digest.bytes.size(), public_key.data()) ==
         0;
}

bool meets_difficulty(const Digest32& digest, unsigned difficulty) noexcept {
  if (difficulty > 256) return false;
  unsigned full = difficulty / 8;
  for (unsigned i = 0; i < full; ++i)
    if (digest.bytes[i] != 0) return false;
  unsigned rest = difficulty % 8;
  if (rest == 0) return true;
  return (digest.bytes[full] >> (8 - rest)) == 0;
}

}  // namespace wdapp
