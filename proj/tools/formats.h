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

#ifndef HYPERLU_TOOLS_FORMATS_H
#define HYPERLU_TOOLS_FORMATS_H

#include <stdexcept>
#include <string>

#include "hyperlu/families.h"
#include "hyperlu/hypergraph.h"

namespace hyperlu::cli {

/// Error with a 1-based line and column in the offending input.
class ParseError : public std::runtime_error {
   public:
    ParseError(int line, int column, const std::string &message);

    int line() const {
        return line_;
    }
    int column() const {
        return column_;
    }

   private:
    int line_;
    int column_;
};

/// "n=<int>" header, then one edge per line as space-separated labels.
/// '#' starts a comment; blank lines are ignored. Repeated edges cancel in pairs.
Hypergraph parse_hypergraph_text(const std::string &text);
std::string format_hypergraph_text(const Hypergraph &graph);

/// "m=<int>" header, then one term per line: "<coef>: e;e;..." where each edge
/// is a comma-separated label list and coef is an integer or p/q with an
/// optional sign. An empty right side is the identity product.
GateRelation parse_relation_text(const std::string &text);
std::string format_relation_text(const GateRelation &relation);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

/// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(const std::string &bytes);

}  // namespace hyperlu::cli

#endif
