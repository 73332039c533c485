// Copyright 2026 The czgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CZGATE_TOOLS_CLI_HPP
#define CZGATE_TOOLS_CLI_HPP

#include <ostream>

namespace czgate::cli {

/// Entry point of the `czgate` command-line tool, separated from main() so
/// tests can drive it in-process. Machine output (CSV/JSON) goes to `out`
/// unless --output redirects it to a file; diagnostics and the PASS/FAIL
/// lines of the `ideal` subcommand go to `err`.
///
/// Exit codes: 0 success, 1 argument error, 2 numerical/validation failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace czgate::cli

#endif  // CZGATE_TOOLS_CLI_HPP
