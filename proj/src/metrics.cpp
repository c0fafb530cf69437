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

#include "blockge/metrics.hpp"

#include "blockge/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace blockge {

namespace {

struct ClassCounts {
    std::size_t pos = 0;
    std::size_t neg = 0;
};

ClassCounts count_classes(std::span<const std::uint8_t> labels) {
    ClassCounts c;
    for(auto l : labels) {
        if(l > 1)
            throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(l) + " is not 0 or 1");
        (l ? c.pos : c.neg) += 1;
    }
    if(c.pos == 0 || c.neg == 0)
        throw Error(ErrorCode::SingleClass, c.pos == 0 ? "no abnormal frames" : "no normal frames");
    return c;
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if(a != b)
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": " + std::to_string(a) + " scores vs " +
                                                  std::to_string(b) + " labels");
}

} // namespace

double roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
    require_same_length(scores.size(), labels.size(), "roc_auc");
    const ClassCounts counts = count_classes(labels);
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Walk tie groups in ascending order. Each positive beats every negative
    // below its group and ties with the negatives inside it. All terms are
    // integers or half-integers, hence exact in double.
    double wins = 0.0;
    double neg_below = 0.0;
    for(std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        double pos = 0.0, neg = 0.0;
        while(j < order.size() && scores[order[j]] == scores[order[i]]) {
            (labels[order[j]] ? pos : neg) += 1.0;
            ++j;
        }
        wins += pos * neg_below + 0.5 * pos * neg;
        neg_below += neg;
        i = j;
    }
    return wins / (static_cast<double>(counts.pos) * static_cast<double>(counts.neg));
}

double roc_auc(const ScoreSeries& scores, const LabelSeries& labels) {
    require_same_structure(scores.segments(), labels.segments(), "roc_auc");
    return roc_auc(scores.values(), labels.values());
}

double anomaly_saliency(std::span<const double> ge, std::span<const std::uint8_t> labels) {
    require_same_length(ge.size(), labels.size(), "anomaly_saliency");
    const ClassCounts counts = count_classes(labels);
    double abnormal = 0.0, normal = 0.0;
    for(std::size_t i = 0; i < ge.size(); ++i)
        (labels[i] ? abnormal : normal) += ge[i];
    abnormal /= static_cast<double>(counts.pos);
    normal /= static_cast<double>(counts.neg);
    if(!(normal > 0.0))
        throw Error(ErrorCode::ZeroNormalLevel, "mean GE of normal frames is zero");
    return (abnormal - normal) / normal;
}

double anomaly_saliency(const ScoreSeries& ge, const LabelSeries& labels) {
    require_same_structure(ge.segments(), labels.segments(), "anomaly_saliency");
    return anomaly_saliency(ge.values(), labels.values());
}

double normal_ge_level(std::span<const double> ge, std::span<const std::uint8_t> labels) {
    require_same_length(ge.size(), labels.size(), "normal_ge_level");
    double acc = 0.0;
    std::size_t n = 0;
    for(std::size_t i = 0; i < ge.size(); ++i) {
        if(labels[i] == 0) {
            acc += ge[i];
            ++n;
        }
    }
    if(n == 0)
        throw Error(ErrorCode::NoNormalFrames, "segment has no normal frames");
    return acc / static_cast<double>(n);
}

double ge_level_ratio(double level_a, double level_b) {
    if(!(level_a > 0.0) || !(level_b > 0.0) || !std::isfinite(level_a) || !std::isfinite(level_b))
        throw Error(ErrorCode::NonPositiveLevel, "GE levels must be positive and finite");
    return std::max(level_a, level_b) / std::min(level_a, level_b);
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
    if(xs.size() != ys.size())
        throw Error(ErrorCode::ShapeMismatch, "pearson_correlation: inputs differ in length");
    const std::size_t n = xs.size();
    if(n < 2)
        throw Error(ErrorCode::TooFewSegments, "need at least 2 segments, got " + std::to_string(n));
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0, ax = 0.0, ay = 0.0;
    for(std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
        ax = std::max(ax, std::fabs(xs[i]));
        ay = std::max(ay, std::fabs(ys[i]));
    }
    // spread below a few ulps of the magnitude is rounding, not signal
    const double eps = 4.0 * std::numeric_limits<double>::epsilon();
    const double floor_x = static_cast<double>(n) * (eps * ax) * (eps * ax);
    const double floor_y = static_cast<double>(n) * (eps * ay) * (eps * ay);
    if(sxx <= floor_x || syy <= floor_y)
        throw Error(ErrorCode::ZeroVariance, sxx <= floor_x ? "first input is constant" : "second input is constant");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string_view to_string(GeLevel level) noexcept {
    return level == GeLevel::Frame ? "frame" : "block";
}

void EvalReport::validate() const {
    auto in_unit = [](const std::optional<double>& v) { return !v || (*v >= 0.0 && *v <= 1.0); };
    if(!in_unit(auc) || !in_unit(auc_frame))
        throw Error(ErrorCode::InvalidArgument, "AUC outside [0, 1]");
    for(const auto& s : sweep)
        if(!in_unit(s.auc))
            throw Error(ErrorCode::InvalidArgument, "sweep AUC outside [0, 1]");
    for(const auto& s : norm_compare)
        if(!in_unit(s.auc))
            throw Error(ErrorCode::InvalidArgument, "normalization AUC outside [0, 1]");
    for(const auto& c : correlation)
        if(c.r && (*c.r < -1.0 || *c.r > 1.0))
            throw Error(ErrorCode::InvalidArgument, "correlation outside [-1, 1]");
    for(const auto& r : ratios)
        if(r.ratio && *r.ratio < 1.0)
            throw Error(ErrorCode::InvalidArgument, "GE-level ratio below 1");
}

} // namespace blockge
