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

#include "wdapp/bytes.hpp"
#include "wdapp/u256.hpp"

#include <charconv>

namespace wdapp {
namespace {

constexpr char kDigits[] = "0123456789abcdef";

int nibble(char c, bool allow_upper) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (allow_upper && c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::optional<Bytes> decode(std::string_view digits, bool allow_upper) {
  if (digits.size() % 2 != 0) return std::nullopt;
  Bytes out(digits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(digits[2 * i], allow_upper);
    int lo = nibble(digits[2 * i + 1], allow_upper);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve(2 + data.size() * 2);
  out += "0x";
  for (auto b : data) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0x0f];
  }
  return out;
}

std::optional<Bytes> parse_hex(std::string_view text) {
  if (!text.starts_with("0x")) return std::nullopt;
  return decode(text.substr(2), false);
}

std::optional<Bytes> parse_hex_lenient(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  return decode(text, true);
}

std::optional<u256> parse_u256(std::string_view text) {
  if (text.empty() || text.size() > 78) return std::nullopt;
  if (text.size() > 1 && text[0] == '0') return std::nullopt;
  u256 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    auto times_ten = checked_mul(value, 10);
    if (!times_ten) return std::nullopt;
    auto next = checked_add(*times_ten, static_cast<unsigned>(c - '0'));
    if (!next) return std::nullopt;
    value = *next;
  }
  return value;
}

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  if (text.empty() || (text.size() > 1 && text[0] == '0')) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace wdapp
