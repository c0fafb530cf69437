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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockge {

/// Every failure the library can raise. The numeric values are part of the
/// C ABI (see blockge.h) and must never be reordered.
enum class ErrorCode : int {
    InvalidArgument = 1,
    DimensionMismatch = 2,
    NonFiniteInput = 3,
    BlockTooLarge = 4,
    ShapeMismatch = 5,
    SingleClass = 6,
    ZeroNormalLevel = 7,
    NoNormalFrames = 8,
    NonPositiveLevel = 9,
    ZeroVariance = 10,
    TooFewSegments = 11,
    PlacementFailure = 12,
    ParseError = 13,
    MissingFile = 14,
    LabelOutOfRange = 15,
    DuplicateSegmentId = 16,
    BadMagic = 17,
    TruncatedFile = 18,
    NonFiniteValue = 19,
    NegativeValue = 20,
    IoError = 21,
    EmptySeries = 22,
    TooFewPoints = 23,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Typed failure. `where` carries the location (file path, manifest field,
/// line number) when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string where = {});

    ErrorCode code() const noexcept { return code_; }
    const std::string& where() const noexcept { return where_; }
    /// Message without the code name and location.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
    std::string where_;
};

} // namespace blockge
