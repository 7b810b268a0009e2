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

// Field extraction for the JSON wire forms. All helpers throw DecodeError.

#include "wdapp/canonical.hpp"
#include "wdapp/crypto.hpp"
#include "wdapp/token.hpp"
#include "wdapp/u256.hpp"

#include <string>

namespace wdapp::wire {

using token::DecodeError;

inline const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw DecodeError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

template <class Fixed>
Fixed fixed_field(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_string()) throw DecodeError(std::string("field '") + key + "' must be a hex string");
  auto parsed = Fixed::from_hex(v.get<std::string>());
  if (!parsed)
    throw DecodeError(std::string("field '") + key + "' must be " + std::to_string(Fixed::size) +
                      " bytes of lowercase 0x-hex");
  return *parsed;
}

inline Address address_field(const json& obj, const char* key) { return fixed_field<Address>(obj, key); }

inline u256 u256_field(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  if (!v.is_string()) throw DecodeError(std::string("field '") + key + "' must be a decimal string");
  auto n = parse_u256(v.get<std::string>());
  if (!n) throw DecodeError(std::string("field '") + key + "' is not a 256-bit unsigned integer");
  return *n;
}

inline std::uint64_t u64_field(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  if (!v.is_string()) throw DecodeError(std::string("field '") + key + "' must be a decimal string");
  auto n = parse_u64(v.get<std::string>());
  if (!n) throw DecodeError(std::string("field '") + key + "' is not a 64-bit unsigned integer");
  return *n;
}

inline std::string string_field(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_string()) throw DecodeError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline bool bool_field(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_boolean()) throw DecodeError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

}  // namespace wdapp::wire
