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

#include "blockge/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blockge {

/// Dataset: one min/max over every frame (norm0).
/// PerVideo: min/max within each segment (norm1).
enum class NormalizationMode { Dataset, PerVideo };

std::string_view to_string(NormalizationMode mode) noexcept;
/// Accepts "dataset"/"norm0" and "video"/"norm1".
NormalizationMode parse_normalization_mode(std::string_view text);

struct NormalizedScores {
    ScoreSeries scores;
    /// Scopes whose range collapsed (max == min): "dataset" or a segment id.
    /// Their scores are all zero.
    std::vector<std::string> degenerate_scopes;
};

/// Min-max normalization into [0, 1]. Two passes: extrema first, then the
/// affine map. Throws EmptySeries on an empty series.
NormalizedScores normalize(const ScoreSeries& series, NormalizationMode mode = NormalizationMode::Dataset);

struct FusionWeight {
    std::string id;
    double weight = 1.0;

    bool operator==(const FusionWeight&) const = default;
};

/// Non-empty list of finite, non-negative weights.
class FusionWeights {
public:
    explicit FusionWeights(std::vector<FusionWeight> entries);
    /// All-ones weights for the given series ids.
    static FusionWeights uniform(const std::vector<std::string>& ids);

    const std::vector<FusionWeight>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<FusionWeight> entries_;
};

/// Pointwise sum of weight_i * series_i. Throws ShapeMismatch on differing
/// layouts and InvalidArgument when the counts disagree.
ScoreSeries fuse(const std::vector<ScoreSeries>& series, const FusionWeights& weights);

} // namespace blockge
