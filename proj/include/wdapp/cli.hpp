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

#include <iosfwd>
#include <string>
#include <vector>

namespace wdapp::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUnreachable = 2,
  kKeystoreFault = 3,
};

inline constexpr const char* kDefaultNode = "http://127.0.0.1:8545";
inline constexpr const char* kDefaultKeystore = "wdapp-keystore.json";

/// Entry point of the `wdapp` command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdapp::cli
