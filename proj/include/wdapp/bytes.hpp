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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdapp {

using Bytes = std::vector<std::uint8_t>;

/// Lowercase hex with a `0x` prefix.
std::string to_hex(std::span<const std::uint8_t> data);

/// Strict inverse of to_hex: requires the `0x` prefix, an even number of
/// digits and lowercase a-f. Returns nullopt on anything else.
std::optional<Bytes> parse_hex(std::string_view text);

/// Same as parse_hex but also accepts uppercase digits and a missing prefix.
/// Meant for human input; wire formats use parse_hex.
std::optional<Bytes> parse_hex_lenient(std::string_view text);

class HexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width byte string. The tag keeps digests, addresses and signatures
/// from being mixed up at compile time.
template <std::size_t N, class Tag>
struct FixedBytes {
  static constexpr std::size_t size = N;

  std::array<std::uint8_t, N> bytes{};

  static std::optional<FixedBytes> from_span(std::span<const std::uint8_t> data) {
    if (data.size() != N) return std::nullopt;
    FixedBytes out;
    std::copy(data.begin(), data.end(), out.bytes.begin());
    return out;
  }

  static std::optional<FixedBytes> from_hex(std::string_view text) {
    auto raw = parse_hex(text);
    if (!raw) return std::nullopt;
    return from_span(*raw);
  }

  /// Throws HexError; for call sites where the input is already trusted.
  static FixedBytes must_from_hex(std::string_view text) {
    auto parsed = from_hex(text);
    if (!parsed) throw HexError("expected " + std::to_string(N) + "-byte hex, got '" + std::string(text) + "'");
    return *parsed;
  }

  std::string hex() const { return to_hex(bytes); }
  std::span<const std::uint8_t> span() const { return bytes; }
  bool is_zero() const {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }

  auto operator<=>(const FixedBytes&) const = default;
  bool operator==(const FixedBytes&) const = default;
};

}  // namespace wdapp
