// Copyright 2026 The trispec Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trispec::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kCheckFailed = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Replaces `--config FILE` by the file's key=value entries rendered as
/// `--key=value` flags, skipping keys already given on the command line.
/// Throws std::invalid_argument on unreadable files or malformed lines.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

}  // namespace trispec::cli
