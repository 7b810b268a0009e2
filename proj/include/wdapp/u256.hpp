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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wdapp {

/// All native and token amounts. Engine mutations use the checked helpers below.
using u256 = boost::multiprecision::uint256_t;

inline const u256& u256_max() {
  static const u256 max = ~u256(0);
  return max;
}

inline std::optional<u256> checked_add(const u256& a, const u256& b) {
  if (a > u256_max() - b) return std::nullopt;
  return a + b;
}

inline std::optional<u256> checked_mul(const u256& a, const u256& b) {
  if (a == 0 || b == 0) return u256(0);
  if (a > u256_max() / b) return std::nullopt;
  return a * b;
}

/// Base-10, no sign, no leading zeros (except "0" itself), at most 2^256-1.
std::optional<u256> parse_u256(std::string_view text);
std::optional<std::uint64_t> parse_u64(std::string_view text);

inline std::string to_decimal(const u256& value) { return value.str(); }

}  // namespace wdapp
