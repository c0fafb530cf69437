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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace blockge {

/// One contiguous video inside a series.
struct Segment {
    std::string id;
    std::size_t start = 0;
    std::size_t length = 0;

    bool operator==(const Segment&) const = default;
};

/// Builds back-to-back segments from (id, length) pairs.
std::vector<Segment> make_layout(const std::vector<std::pair<std::string, std::size_t>>& id_lengths);

/// Throws InvalidArgument unless the segments tile [0, total) in order with
/// unique ids.
void validate_layout(const std::vector<Segment>& segments, std::size_t total);

/// Per-frame scalars, ordered by (segment, time).
class ScoreSeries {
public:
    ScoreSeries() = default;
    ScoreSeries(std::vector<Segment> segments, std::vector<double> values);
    /// Single segment covering all values.
    static ScoreSeries single(std::string id, std::vector<double> values);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> segment_values(std::size_t seg) const noexcept {
        return std::span<const double>(values_).subspan(segments_[seg].start, segments_[seg].length);
    }

    /// Same layout, new values. Throws InvalidArgument on length mismatch.
    ScoreSeries with_values(std::vector<double> values) const;

    bool operator==(const ScoreSeries&) const = default;

private:
    std::vector<Segment> segments_;
    std::vector<double> values_;
};

/// One binary label per frame (0 normal, 1 abnormal).
class LabelSeries {
public:
    LabelSeries() = default;
    /// Throws LabelOutOfRange for values other than 0/1.
    LabelSeries(std::vector<Segment> segments, std::vector<std::uint8_t> labels);
    static LabelSeries single(std::string id, std::vector<std::uint8_t> labels);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    std::span<const std::uint8_t> values() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::span<const std::uint8_t> segment_values(std::size_t seg) const noexcept {
        return std::span<const std::uint8_t>(labels_).subspan(segments_[seg].start, segments_[seg].length);
    }

    bool operator==(const LabelSeries&) const = default;

private:
    std::vector<Segment> segments_;
    std::vector<std::uint8_t> labels_;
};

bool same_structure(const std::vector<Segment>& a, const std::vector<Segment>& b) noexcept;

/// Throws ShapeMismatch when the two layouts differ.
void require_same_structure(const std::vector<Segment>& a, const std::vector<Segment>& b, const char* what);

} // namespace blockge
