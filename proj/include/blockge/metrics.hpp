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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blockge {

/// Frame-level ROC AUC in its Mann-Whitney form:
/// P(pos > neg) + 0.5 * P(pos == neg). O(n log n).
/// Throws SingleClass unless both labels occur.
double roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);
double roc_auc(const ScoreSeries& scores, const LabelSeries& labels);

/// (mean abnormal - mean normal) / mean normal, using dataset-global class
/// means. Throws SingleClass or ZeroNormalLevel.
double anomaly_saliency(std::span<const double> ge, std::span<const std::uint8_t> labels);
double anomaly_saliency(const ScoreSeries& ge, const LabelSeries& labels);

/// Mean GE over the normal frames of one segment. Throws NoNormalFrames.
double normal_ge_level(std::span<const double> ge, std::span<const std::uint8_t> labels);

/// max(a, b) / min(a, b). Throws NonPositiveLevel unless both are > 0.
double ge_level_ratio(double level_a, double level_b);

/// Pearson r, clamped to [-1, 1]. Throws TooFewSegments for n < 2 and
/// ZeroVariance when either input is constant (to rounding precision).
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

/// Which GE statistic a row refers to.
enum class GeLevel { Frame, Block };
std::string_view to_string(GeLevel level) noexcept;

struct SaliencyEntry {
    std::string modality;
    GeLevel level = GeLevel::Block;
    std::optional<double> value;
    bool operator==(const SaliencyEntry&) const = default;
};

struct LevelEntry {
    std::string segment;
    std::string modality;
    GeLevel level = GeLevel::Block;
    std::optional<double> target_count;
    std::optional<double> value;
    bool operator==(const LevelEntry&) const = default;
};

struct CorrelationEntry {
    std::string modality;
    GeLevel level = GeLevel::Block;
    std::optional<double> r;
    bool operator==(const CorrelationEntry&) const = default;
};

struct RatioEntry {
    std::string segment_a;
    std::string segment_b;
    std::string modality;
    GeLevel level = GeLevel::Block;
    std::optional<double> ratio;
    bool operator==(const RatioEntry&) const = default;
};

struct SweepEntry {
    std::size_t block_h = 0;
    std::size_t block_w = 0;
    std::optional<double> auc;
    bool operator==(const SweepEntry&) const = default;
};

struct NormCompareEntry {
    std::string population;  // "anomaly-only" or "mixed"
    std::string mode;        // "dataset", "video" or "raw"
    std::optional<double> auc;
    bool operator==(const NormCompareEntry&) const = default;
};

/// Every statistic a run can produce. Absent values stay empty and are
/// serialized as NA. `config` echoes the full run configuration in order;
/// `flags` carries degenerate ranges and per-metric errors.
struct EvalReport {
    std::vector<std::pair<std::string, std::string>> config;
    std::optional<double> auc;
    std::optional<double> auc_frame;
    std::vector<SaliencyEntry> saliency;
    std::vector<LevelEntry> normal_levels;
    std::vector<CorrelationEntry> correlation;
    std::vector<RatioEntry> ratios;
    std::vector<SweepEntry> sweep;
    /// First grid entry attaining the maximum sweep AUC.
    std::optional<SweepEntry> sweep_best;
    std::vector<NormCompareEntry> norm_compare;
    std::vector<std::string> flags;

    bool operator==(const EvalReport&) const = default;

    /// Throws InvalidArgument when an AUC leaves [0, 1], a correlation
    /// leaves [-1, 1] or a ratio drops below 1.
    void validate() const;
};

} // namespace blockge
