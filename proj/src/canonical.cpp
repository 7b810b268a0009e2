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

#include "wdapp/canonical.hpp"
#include "wdapp/bytes.hpp"

namespace wdapp {
namespace {

void write_string(std::string& out, const std::string& s) {
  try {
    out += json(s).dump(-1, ' ', false, json::error_handler_t::strict);
  } catch (const json::type_error& e) {
    throw EncodeError(std::string("string is not valid UTF-8: ") + e.what());
  }
}

void encode(std::string& out, const json& v) {
  switch (v.type()) {
    case json::value_t::object: {
      // object_t is a std::map<std::string, ...>; std::string ordering compares
      // bytes as unsigned char, which for UTF-8 is code-point order.
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        write_string(out, key);
        out += ':';
        encode(out, item);
      }
      out += '}';
      return;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        encode(out, item);
      }
      out += ']';
      return;
    }
    case json::value_t::string:
      write_string(out, v.get_ref<const std::string&>());
      return;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_unsigned:
      out += '"' + std::to_string(v.get<std::uint64_t>()) + '"';
      return;
    case json::value_t::number_integer: {
      auto n = v.get<std::int64_t>();
      if (n < 0) throw EncodeError("negative integer " + std::to_string(n) + " is not encodable");
      out += '"' + std::to_string(n) + '"';
      return;
    }
    case json::value_t::binary:
      out += '"' + to_hex(v.get_binary()) + '"';
      return;
    case json::value_t::number_float:
      throw EncodeError("floating-point values are not encodable");
    case json::value_t::null:
      throw EncodeError("null is not encodable");
    case json::value_t::discarded:
      throw EncodeError("discarded value is not encodable");
  }
  throw EncodeError("unsupported value");
}

}  // namespace

std::string canonical_encode(const json& value) {
  std::string out;
  encode(out, value);
  return out;
}

}  // namespace wdapp
