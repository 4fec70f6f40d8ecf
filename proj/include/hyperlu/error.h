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

#ifndef HYPERLU_ERROR_H
#define HYPERLU_ERROR_H

#include <stdexcept>
#include <string>

namespace hyperlu {

enum class ErrorCode {
    EmptyHyperedge,
    VertexOutOfRange,
    EdgeTooSmall,
    SizeOutOfRange,
    LengthMismatch,
    NotAHypergraphState,
    DimensionMismatch,
    NotUnitary,
    TooLarge,
    RelationDoesNotHold,
    InvalidRelation,
    NotSymmetric,
    DegreeZero,
    ArgOutOfRange,
    BadParams,
    TooFewQubits,
    CannotTraceAll,
    SizeMismatch,
    Overflow,
    OracleMismatch,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can branch on the kind of failure.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace hyperlu

#endif
