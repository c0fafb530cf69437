// Copyright 2026 The blockge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockge/error.hpp"

namespace blockge {

std::string_view error_name(ErrorCode code) noexcept {
    switch(code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonFiniteInput: return "NonFiniteInput";
        case ErrorCode::BlockTooLarge: return "BlockTooLarge";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::SingleClass: return "SingleClass";
        case ErrorCode::ZeroNormalLevel: return "ZeroNormalLevel";
        case ErrorCode::NoNormalFrames: return "NoNormalFrames";
        case ErrorCode::NonPositiveLevel: return "NonPositiveLevel";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::TooFewSegments: return "TooFewSegments";
        case ErrorCode::PlacementFailure: return "PlacementFailure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingFile: return "MissingFile";
        case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorCode::DuplicateSegmentId: return "DuplicateSegmentId";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::TruncatedFile: return "TruncatedFile";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::NegativeValue: return "NegativeValue";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
    }
    return "Unknown";
}

namespace {
std::string compose(ErrorCode code, const std::string& message, const std::string& where) {
    std::string s(error_name(code));
    if(!where.empty())
        s += " at " + where;
    s += ": " + message;
    return s;
}
} // namespace

Error::Error(ErrorCode code, const std::string& message, std::string where)
    : std::runtime_error(compose(code, message, where)), code_(code), message_(message), where_(std::move(where)) {}

} // namespace blockge
