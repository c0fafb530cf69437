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

#include "blockge/scoring.hpp"

#include "blockge/error.hpp"

#include <algorithm>
#include <cmath>
#include <span>

namespace blockge {

std::string_view to_string(NormalizationMode mode) noexcept {
    return mode == NormalizationMode::Dataset ? "dataset" : "video";
}

NormalizationMode parse_normalization_mode(std::string_view text) {
    if(text == "dataset" || text == "norm0")
        return NormalizationMode::Dataset;
    if(text == "video" || text == "norm1")
        return NormalizationMode::PerVideo;
    throw Error(ErrorCode::InvalidArgument, "unknown normalization mode '" + std::string(text) + "'");
}

namespace {

struct Range {
    double lo;
    double hi;
};

Range extrema(std::span<const double> v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {*lo, *hi};
}

// Returns false when the range is degenerate (outputs left at zero).
bool apply(std::span<const double> in, std::span<double> out, Range r) {
    if(r.hi == r.lo) {
        std::fill(out.begin(), out.end(), 0.0);
        return false;
    }
    const double span = r.hi - r.lo;
    for(std::size_t i = 0; i < in.size(); ++i)
        out[i] = (in[i] - r.lo) / span;
    return true;
}

} // namespace

NormalizedScores normalize(const ScoreSeries& series, NormalizationMode mode) {
    if(series.empty())
        throw Error(ErrorCode::EmptySeries, "cannot normalize an empty series");
    std::vector<double> out(series.size(), 0.0);
    std::vector<std::string> degenerate;
    if(mode == NormalizationMode::Dataset) {
        if(!apply(series.values(), out, extrema(series.values())))
            degenerate.emplace_back("dataset");
    } else {
        for(std::size_t s = 0; s < series.segments().size(); ++s) {
            const auto& seg = series.segments()[s];
            if(seg.length == 0)
                continue;
            const auto in = series.segment_values(s);
            if(!apply(in, std::span<double>(out).subspan(seg.start, seg.length), extrema(in)))
                degenerate.push_back(seg.id);
        }
    }
    return {series.with_values(std::move(out)), std::move(degenerate)};
}

FusionWeights::FusionWeights(std::vector<FusionWeight> entries) : entries_(std::move(entries)) {
    if(entries_.empty())
        throw Error(ErrorCode::InvalidArgument, "fusion needs at least one weight");
    for(const auto& e : entries_)
        if(!std::isfinite(e.weight) || e.weight < 0.0)
            throw Error(ErrorCode::InvalidArgument, "fusion weights must be finite and non-negative", e.id);
}

FusionWeights FusionWeights::uniform(const std::vector<std::string>& ids) {
    std::vector<FusionWeight> entries;
    for(const auto& id : ids)
        entries.push_back({id, 1.0});
    return FusionWeights(std::move(entries));
}

ScoreSeries fuse(const std::vector<ScoreSeries>& series, const FusionWeights& weights) {
    if(series.size() != weights.size())
        throw Error(ErrorCode::InvalidArgument, std::to_string(series.size()) + " series but " +
                                                    std::to_string(weights.size()) + " weights");
    for(std::size_t i = 1; i < series.size(); ++i)
        require_same_structure(series[0].segments(), series[i].segments(), "fuse");
    std::vector<double> out(series[0].size(), 0.0);
    for(std::size_t i = 0; i < series.size(); ++i) {
        const double w = weights.entries()[i].weight;
        const auto v = series[i].values();
        for(std::size_t t = 0; t < out.size(); ++t)
            out[t] += w * v[t];
    }
    return series[0].with_values(std::move(out));
}

} // namespace blockge
