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

#include "hyperlu/error.h"

namespace hyperlu {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyHyperedge:
            return "EmptyHyperedge";
        case ErrorCode::VertexOutOfRange:
            return "VertexOutOfRange";
        case ErrorCode::EdgeTooSmall:
            return "EdgeTooSmall";
        case ErrorCode::SizeOutOfRange:
            return "SizeOutOfRange";
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::NotAHypergraphState:
            return "NotAHypergraphState";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::RelationDoesNotHold:
            return "RelationDoesNotHold";
        case ErrorCode::InvalidRelation:
            return "InvalidRelation";
        case ErrorCode::NotSymmetric:
            return "NotSymmetric";
        case ErrorCode::DegreeZero:
            return "DegreeZero";
        case ErrorCode::ArgOutOfRange:
            return "ArgOutOfRange";
        case ErrorCode::BadParams:
            return "BadParams";
        case ErrorCode::TooFewQubits:
            return "TooFewQubits";
        case ErrorCode::CannotTraceAll:
            return "CannotTraceAll";
        case ErrorCode::SizeMismatch:
            return "SizeMismatch";
        case ErrorCode::Overflow:
            return "Overflow";
        case ErrorCode::OracleMismatch:
            return "OracleMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace hyperlu
