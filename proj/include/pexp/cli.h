// Copyright 2026 The pexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PEXP_CLI_H
#define PEXP_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace pexp {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotVerified = 1,
    kExitUsage = 2,
    kExitIoOrSize = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (circuit text and JSON); one-line diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pexp

#endif
