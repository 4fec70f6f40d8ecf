// Copyright 2026 The hyperlu Authors
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

#ifndef HYPERLU_TOOLS_CLI_H
#define HYPERLU_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

#include "hyperlu/hypergraph.h"

namespace hyperlu::cli {

constexpr const char *kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitRefused = 3,
};

/// Runs one command line (program name excluded). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// DOT rendering: size-2 edges as plain edges, every other edge as a diamond hub.
std::string hypergraph_dot(const Hypergraph &graph);

}  // namespace hyperlu::cli

#endif
