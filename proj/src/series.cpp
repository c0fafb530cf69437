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

#include "blockge/series.hpp"

#include "blockge/error.hpp"

#include <cmath>
#include <set>

namespace blockge {

std::vector<Segment> make_layout(const std::vector<std::pair<std::string, std::size_t>>& id_lengths) {
    std::vector<Segment> out;
    out.reserve(id_lengths.size());
    std::size_t start = 0;
    for(const auto& [id, len] : id_lengths) {
        out.push_back({id, start, len});
        start += len;
    }
    return out;
}

void validate_layout(const std::vector<Segment>& segments, std::size_t total) {
    std::set<std::string> ids;
    std::size_t next = 0;
    for(const auto& s : segments) {
        if(s.start != next)
            throw Error(ErrorCode::InvalidArgument, "segments must be contiguous and ordered", "segment " + s.id);
        if(!ids.insert(s.id).second)
            throw Error(ErrorCode::DuplicateSegmentId, "duplicate segment id", "segment " + s.id);
        next += s.length;
    }
    if(next != total)
        throw Error(ErrorCode::InvalidArgument,
                    "segments cover " + std::to_string(next) + " frames but series has " + std::to_string(total));
}

ScoreSeries::ScoreSeries(std::vector<Segment> segments, std::vector<double> values)
    : segments_(std::move(segments)), values_(std::move(values)) {
    validate_layout(segments_, values_.size());
    for(std::size_t i = 0; i < values_.size(); ++i)
        if(!std::isfinite(values_[i]))
            throw Error(ErrorCode::NonFiniteInput, "non-finite score at frame " + std::to_string(i));
}

ScoreSeries ScoreSeries::single(std::string id, std::vector<double> values) {
    const std::size_t n = values.size();
    return ScoreSeries({{std::move(id), 0, n}}, std::move(values));
}

ScoreSeries ScoreSeries::with_values(std::vector<double> values) const {
    if(values.size() != values_.size())
        throw Error(ErrorCode::InvalidArgument, "replacement values have the wrong length");
    return ScoreSeries(segments_, std::move(values));
}

LabelSeries::LabelSeries(std::vector<Segment> segments, std::vector<std::uint8_t> labels)
    : segments_(std::move(segments)), labels_(std::move(labels)) {
    validate_layout(segments_, labels_.size());
    for(std::size_t i = 0; i < labels_.size(); ++i)
        if(labels_[i] > 1)
            throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(labels_[i]) + " is not 0 or 1",
                        "frame " + std::to_string(i));
}

LabelSeries LabelSeries::single(std::string id, std::vector<std::uint8_t> labels) {
    const std::size_t n = labels.size();
    return LabelSeries({{std::move(id), 0, n}}, std::move(labels));
}

bool same_structure(const std::vector<Segment>& a, const std::vector<Segment>& b) noexcept {
    return a == b;
}

void require_same_structure(const std::vector<Segment>& a, const std::vector<Segment>& b, const char* what) {
    if(!same_structure(a, b))
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": segment structures differ");
}

} // namespace blockge
