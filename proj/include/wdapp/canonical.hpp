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

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace wdapp {

using json = nlohmann::json;

class EncodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical byte form used for every hash and signature:
///   - compact JSON, object keys in ascending code-point order
///   - unsigned integers written as base-10 strings
///   - binary values written as 0x-prefixed lowercase hex strings
///   - strings, booleans, objects and arrays as-is
/// Null, floating point and negative numbers raise EncodeError, as does a
/// string that is not valid UTF-8.
std::string canonical_encode(const json& value);

}  // namespace wdapp
